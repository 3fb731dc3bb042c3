#include "dpz/surface.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace dpz {

Surface::Surface(std::string id) : id_(std::move(id)) {
    if (id_ == "P1xP1") {
        blowups_ = -1;
        form_ = {{0, 1}, {1, 0}};
        canonical_ = {-2, -2};
        roots_ = {{1, -1}};
    } else {
        int n = -1;
        if (id_ == "P2") {
            n = 0;
        } else if (id_.size() == 2 && id_[0] == 'X' && id_[1] >= '1' && id_[1] <= '8') {
            n = id_[1] - '0';
        }
        if (n < 0) throw std::invalid_argument("unknown surface id '" + id_ + "'");
        blowups_ = n;
        form_.assign(n + 1, Vec(n + 1, 0));
        form_[0][0] = 1;
        for (int i = 1; i <= n; ++i) form_[i][i] = -1;
        canonical_.assign(n + 1, 1);
        canonical_[0] = -3;
        if (n == 2) roots_.push_back({0, 1, -1});
        if (n >= 3) {
            Vec a(n + 1, 0);
            a[0] = 1;
            a[1] = a[2] = a[3] = -1;
            roots_.push_back(a);
            for (int i = 2; i <= n; ++i) {
                Vec v(n + 1, 0);
                v[i - 1] = 1;
                v[i] = -1;
                roots_.push_back(v);
            }
        }
    }
    k2_ = dot(canonical_, canonical_);
}

const std::vector<std::string>& Surface::ids() {
    static const std::vector<std::string> all = {"P2", "P1xP1", "X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"};
    return all;
}

const Surface& Surface::get(const std::string& id) {
    static const std::map<std::string, std::unique_ptr<Surface>> registry = [] {
        std::map<std::string, std::unique_ptr<Surface>> m;
        for (const auto& sid : ids()) m.emplace(sid, std::unique_ptr<Surface>(new Surface(sid)));
        return m;
    }();
    auto it = registry.find(id);
    if (it == registry.end()) throw std::invalid_argument("unknown surface id '" + id + "'");
    return *it->second;
}

Vec Surface::anticanonical_class() const {
    Vec v = canonical_;
    for (auto& x : v) x = -x;
    return v;
}

void Surface::check_dimension(const Vec& v) const {
    if (v.size() != canonical_.size())
        throw std::invalid_argument("divisor has " + std::to_string(v.size()) + " coordinates, surface " + id_ +
                                    " needs " + std::to_string(canonical_.size()));
}

Int Surface::dot(const Vec& a, const Vec& b) const {
    check_dimension(a);
    check_dimension(b);
    Int sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (form_[i][j] != 0) sum = checked_add(sum, checked_mul(checked_mul(a[i], form_[i][j]), b[j]));
    return sum;
}

NumClass operator+(const NumClass& a, const NumClass& b) {
    if (a.c1.size() != b.c1.size()) throw std::invalid_argument("class dimension mismatch");
    NumClass out{checked_add(a.r, b.r), a.c1, checked_add(a.chi, b.chi)};
    for (std::size_t i = 0; i < out.c1.size(); ++i) out.c1[i] = checked_add(out.c1[i], b.c1[i]);
    return out;
}

NumClass operator*(Int k, const NumClass& a) {
    NumClass out{checked_mul(k, a.r), a.c1, checked_mul(k, a.chi)};
    for (auto& x : out.c1) x = checked_mul(k, x);
    return out;
}

NumClass operator-(const NumClass& a, const NumClass& b) { return a + (-1) * b; }

Slope Slope::of(Int d, Int r) {
    if (r == 0) return Slope{true, Rational(0)};
    return Slope{false, Rational(d) / Rational(r)};
}

std::strong_ordering Slope::operator<=>(const Slope& o) const {
    if (infinite || o.infinite) {
        if (infinite == o.infinite) return std::strong_ordering::equal;
        return infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (value < o.value) return std::strong_ordering::less;
    if (value > o.value) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Slope Slope::plus(Int k) const {
    if (infinite) return *this;
    return Slope{false, value + Rational(k)};
}

std::string Slope::str() const { return infinite ? "inf" : to_string(value); }

Int euler_form(const NumClass& e, const NumClass& f, const Surface& s) {
    Int v = checked_add(checked_mul(e.r, f.chi), checked_mul(f.r, e.chi));
    v = checked_sub(v, checked_mul(e.r, f.r));
    v = checked_sub(v, s.dot(e.c1, f.c1));
    v = checked_add(v, checked_mul(f.r, s.dot(s.canonical_class(), e.c1)));
    return v;
}

NumClass make_exceptional(Int r, const Vec& c1, const Surface& s) {
    if (r <= 0) throw std::domain_error("exceptional class needs positive rank");
    s.check_dimension(c1);
    Int num = checked_add(checked_add(1, checked_mul(r, r)), s.dot(c1, c1));
    num = checked_sub(num, checked_mul(r, s.dot(s.canonical_class(), c1)));
    Int den = checked_mul(2, r);
    if (num % den != 0) {
        NumClass bad{r, c1, 0};
        throw std::domain_error("no exceptional class with data " + to_string(bad) + " on " + s.id());
    }
    return NumClass{r, c1, num / den};
}

Int degree(const NumClass& e, const Surface& s) { return -s.dot(s.canonical_class(), e.c1); }

Slope slope(const NumClass& e, const Surface& s) { return Slope::of(degree(e, s), e.r); }

NumClass twist(const NumClass& e, const Vec& L, const Surface& s) {
    s.check_dimension(L);
    NumClass out = e;
    for (std::size_t i = 0; i < L.size(); ++i) out.c1[i] = checked_add(out.c1[i], checked_mul(e.r, L[i]));
    // chi(E ⊗ L) = chi(E) + c1(E)·L + r (L² - K·L) / 2; L² - K·L is always even.
    Int q = checked_sub(s.dot(L, L), s.dot(s.canonical_class(), L));
    out.chi = checked_add(checked_add(e.chi, s.dot(e.c1, L)), checked_mul(e.r, q / 2));
    return out;
}

NumClass twist_canonical(const NumClass& e, Int k, const Surface& s) {
    Vec L = s.canonical_class();
    for (auto& x : L) x = checked_mul(k, x);
    return twist(e, L, s);
}

NumClass normalize_sign(const NumClass& e, const Surface& s) {
    if (e.r > 0) return e;
    if (e.r < 0) return (-1) * e;
    Int d = degree(e, s);
    if (d == 0) throw std::domain_error("class " + to_string(e) + " has rank 0 and degree 0");
    return d > 0 ? e : (-1) * e;
}

Vec reflect(const Vec& rho, const Vec& D, const Surface& s) {
    if (s.dot(rho, rho) != -2 || s.dot(rho, s.canonical_class()) != 0)
        throw std::invalid_argument("reflect: vector is not a root");
    Int k = s.dot(D, rho);
    Vec out = D;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], checked_mul(k, rho[i]));
    return out;
}

int simple_root_position(const Surface& s, int sage_index, int offset) {
    int idx = sage_index;
    const int n = s.blowups();
    if (n == 4) {
        if (idx == 1) idx = 3;
        else if (idx == 3) idx = 1;
    } else if (n == 5) {
        static const int five[4] = {1, 2, 3, 0};
        if (idx >= 0 && idx < 4) idx = five[idx];
    } else if (n >= 6) {
        if (idx == 0) idx = 1;
        else if (idx == 1) idx = 0;
    }
    int pos = idx - offset;
    if (pos < 0 || pos >= static_cast<int>(s.simple_roots().size()))
        throw std::out_of_range("reflection index " + std::to_string(sage_index) + " invalid on " + s.id());
    return pos;
}

NumClass weyl_apply(const std::vector<int>& word, const NumClass& e, const Surface& s, int offset) {
    NumClass out = e;
    for (int w : word) out.c1 = reflect(s.simple_roots()[simple_root_position(s, w, offset)], out.c1, s);
    return out;
}

std::string to_string(const NumClass& e) {
    std::ostringstream os;
    os << "[" << e.r << ", (";
    for (std::size_t i = 0; i < e.c1.size(); ++i) os << (i ? ", " : "") << e.c1[i];
    os << ")]";
    return os.str();
}

}  // namespace dpz
