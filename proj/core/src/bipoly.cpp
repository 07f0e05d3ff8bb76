#include "planekit/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace planekit {

void BiPoly::add_term(int i, int j, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = Key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::constant(const Scalar& c) {
    BiPoly p(c.field());
    p.add_term(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(const Scalar& c, int i, int j) {
    require(i >= 0 && j >= 0, "BadShape", "negative exponent in monomial");
    BiPoly p(c.field());
    p.add_term(i, j, c);
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& f, const BiPoly& v) {
    require(f.field() == v.field(), "FieldMismatch", "substitution over different fields");
    BiPoly acc = BiPoly::zero(f.field());
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * v + BiPoly::constant(f.coeff(i));
    return acc;
}

BiPoly BiPoly::from_terms(const FieldSpec& f, std::vector<std::pair<Key, Scalar>> terms) {
    BiPoly r(f);
    auto hint = r.terms_.end();
    Key prev{-1, -1};
    for (auto& [k, c] : terms) {
        require(k.first >= 0 && k.second >= 0, "BadShape", "negative exponent in term list");
        require(prev < k, "BadShape", "term keys not strictly ascending");
        prev = k;
        if (c.is_zero()) continue;
        require(c.field() == f, "FieldMismatch", "term coefficient over the wrong field");
        hint = r.terms_.emplace_hint(hint, k, std::move(c));
        ++hint;
    }
    return r;
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return UniPoly::kNegInfinity;
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

Scalar BiPoly::coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    require(field_ == o.field_, "FieldMismatch", "bipoly operands over different fields");
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    require(field_ == o.field_, "FieldMismatch", "bipoly operands over different fields");
    BiPoly r(field_);
    if (terms_.empty() || o.terms_.empty()) return r;

    int dxa = 0, dya = 0, dxb = 0, dyb = 0;
    for (const auto& [k, c] : terms_) {
        dxa = std::max(dxa, k.first);
        dya = std::max(dya, k.second);
    }
    for (const auto& [k, c] : o.terms_) {
        dxb = std::max(dxb, k.first);
        dyb = std::max(dyb, k.second);
    }
    const std::size_t ny = static_cast<std::size_t>(dya + dyb) + 1;
    const std::size_t cells = (static_cast<std::size_t>(dxa + dxb) + 1) * ny;
    const std::size_t pairs = terms_.size() * o.terms_.size();
    if (cells > 4096 && cells / 16 > pairs) {
        // too sparse for a dense accumulator
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    auto emit = [&](auto&& cell_to_scalar, auto&& nonzero) {
        auto hint = r.terms_.end();
        for (int i = 0; i <= dxa + dxb; ++i)
            for (int j = 0; j <= dya + dyb; ++j) {
                const std::size_t idx = static_cast<std::size_t>(i) * ny + j;
                if (!nonzero(idx)) continue;
                hint = r.terms_.emplace_hint(hint, Key{i, j}, cell_to_scalar(idx));
                ++hint;
            }
    };

    if (field_.is_prime_field()) {
        const std::uint64_t p = field_.p;
        std::vector<std::uint64_t> grid(cells, 0);
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_) {
                std::uint64_t& cell =
                    grid[static_cast<std::size_t>(ka.first + kb.first) * ny +
                         static_cast<std::size_t>(ka.second + kb.second)];
                cell = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(ca.res()) * cb.res() + cell) % p);
            }
        emit([&](std::size_t idx) { return Scalar::residue(grid[idx], field_); },
             [&](std::size_t idx) { return grid[idx] != 0; });
        return r;
    }

    // rationals: accumulate integer numerators over one shared denominator and
    // canonicalize once per output term instead of once per product term
    mpz_class da = 1, db = 1;
    for (const auto& [k, c] : terms_)
        mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), mpq_denref(c.rat().get_mpq_t()));
    for (const auto& [k, c] : o.terms_)
        mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), mpq_denref(c.rat().get_mpq_t()));
    auto scale_numerators = [](const std::map<Key, Scalar>& ts, const mpz_class& d) {
        std::vector<std::pair<Key, mpz_class>> out;
        out.reserve(ts.size());
        mpz_class q;
        for (const auto& [k, c] : ts) {
            mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), mpq_denref(c.rat().get_mpq_t()));
            out.emplace_back(k, q * c.rat().get_num());
        }
        return out;
    };
    const auto za = scale_numerators(terms_, da);
    const auto zb = scale_numerators(o.terms_, db);
    std::vector<mpz_class> grid(cells);
    for (const auto& [ka, na] : za)
        for (const auto& [kb, nb] : zb)
            mpz_addmul(grid[static_cast<std::size_t>(ka.first + kb.first) * ny +
                            static_cast<std::size_t>(ka.second + kb.second)]
                           .get_mpz_t(),
                       na.get_mpz_t(), nb.get_mpz_t());
    const mpz_class d = da * db;
    emit(
        [&](std::size_t idx) {
            mpq_class v(grid[idx], d);
            v.canonicalize();
            return Scalar::from_mpq(v);
        },
        [&](std::size_t idx) { return mpz_sgn(grid[idx].get_mpz_t()) != 0; });
    return r;
}

BiPoly BiPoly::scaled(const Scalar& s) const {
    BiPoly r(field_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

BiPoly BiPoly::pow(int e) const {
    require(e >= 0, "BadShape", "negative polynomial power");
    BiPoly acc = constant(Scalar::one(field_));
    BiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BiPoly BiPoly::leading_form() const {
    BiPoly r(field_);
    const int d = total_degree();
    if (d == UniPoly::kNegInfinity) return r;
    for (const auto& [k, c] : terms_)
        if (k.first + k.second == d) r.terms_.emplace(k, c);
    return r;
}

Scalar BiPoly::eval(const Scalar& xv, const Scalar& yv) const {
    Scalar acc = Scalar::zero(field_);
    for (const auto& [k, c] : terms_)
        acc = acc + c * xv.pow(k.first) * yv.pow(k.second);
    return acc;
}

bool BiPoly::depends_only_on_x() const {
    for (const auto& [k, c] : terms_)
        if (k.second != 0) return false;
    return true;
}

UniPoly BiPoly::to_unipoly_in_x() const {
    require(depends_only_on_x(), "BadShape", "value depends on y");
    UniPoly r = UniPoly::zero(field_);
    for (const auto& [k, c] : terms_) r = r + UniPoly::monomial(c, k.first);
    return r;
}

UniPoly BiPoly::to_unipoly_in_y() const {
    for (const auto& [k, c] : terms_)
        require(k.first == 0, "BadShape", "value depends on x");
    UniPoly r = UniPoly::zero(field_);
    for (const auto& [k, c] : terms_) r = r + UniPoly::monomial(c, k.second);
    return r;
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    // print highest total degree first, then higher x-degree first
    std::vector<std::pair<Key, Scalar>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second;
        const int db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [k, c] : ts) {
        bool neg = false;
        std::string cs = c.str();
        if (!cs.empty() && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        if (k.first > 0) mono += (k.first == 1) ? "x" : "x^" + std::to_string(k.first);
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += (k.second == 1) ? "y" : "y^" + std::to_string(k.second);
        }
        if (mono.empty()) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

// Dense fraction-free substitution engine. A polynomial is held as an integer
// coefficient grid over one shared denominator; each pass rewrites the grid
// for an elementary change of variables and only the final emission
// canonicalizes. The same passes run over F_p with residues and trivial
// denominators.

struct QSubstRing {
    using C = mpz_class;
    struct Param {
        C n, d;
    };
    C zero() const { return C(0); }
    C one() const { return C(1); }
    bool is_zero(const C& v) const { return mpz_sgn(v.get_mpz_t()) == 0; }
    bool is_one(const C& v) const { return mpz_cmp_ui(v.get_mpz_t(), 1) == 0; }
    C add(const C& a, const C& b) const { return C(a + b); }
    C mul(const C& a, const C& b) const { return C(a * b); }
    void addmul(C& acc, const C& a, const C& b) const {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    Param param(const Scalar& s) const { return {s.rat().get_num(), s.rat().get_den()}; }
    Param unit_param() const { return {one(), one()}; }
    void lift(const std::map<BiPoly::Key, Scalar>& ts, std::vector<C>& cells, int ny,
              C& den) const {
        den = 1;
        for (const auto& [k, c] : ts)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(c.rat().get_mpq_t()));
        mpz_class q;
        for (const auto& [k, c] : ts) {
            mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), mpq_denref(c.rat().get_mpq_t()));
            cells[static_cast<std::size_t>(k.first) * ny + k.second] = q * c.rat().get_num();
        }
    }
    Scalar make_scalar(const C& n, const C& den, const FieldSpec&) const {
        mpq_class v(n, den);
        v.canonicalize();
        return Scalar::from_mpq(v);
    }
};

struct PSubstRing {
    std::uint64_t p;
    using C = std::uint64_t;
    struct Param {
        C n, d;
    };
    C zero() const { return 0; }
    C one() const { return 1; }
    bool is_zero(const C& v) const { return v == 0; }
    bool is_one(const C& v) const { return v == 1; }
    C add(const C& a, const C& b) const {
        const C s = a + b;
        return s >= p ? s - p : s;
    }
    C mul(const C& a, const C& b) const {
        return static_cast<C>(static_cast<unsigned __int128>(a) * b % p);
    }
    void addmul(C& acc, const C& a, const C& b) const {
        acc = static_cast<C>((static_cast<unsigned __int128>(a) * b + acc) % p);
    }
    C inv(C a) const { // p prime, a != 0
        C r = 1;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Param param(const Scalar& s) const { return {s.res(), 1}; }
    Param unit_param() const { return {1, 1}; }
    void lift(const std::map<BiPoly::Key, Scalar>& ts, std::vector<C>& cells, int ny,
              C& den) const {
        den = 1;
        for (const auto& [k, c] : ts)
            cells[static_cast<std::size_t>(k.first) * ny + k.second] = c.res();
    }
    Scalar make_scalar(const C& n, const C& den, const FieldSpec& f) const {
        return Scalar::residue(den == 1 ? n : mul(n, inv(den)), f);
    }
};

template <class R>
struct SGrid {
    int dx, dy;
    std::vector<typename R::C> c; // x-major, (dx+1)*(dy+1)
    typename R::C den;
    typename R::C& at(int i, int j) { return c[static_cast<std::size_t>(i) * (dy + 1) + j]; }
    const typename R::C& at(int i, int j) const {
        return c[static_cast<std::size_t>(i) * (dy + 1) + j];
    }
};

template <class R>
SGrid<R> grid_load(const R& ring, const BiPoly& p) {
    SGrid<R> g;
    g.dx = 0;
    g.dy = 0;
    for (const auto& [k, c] : p.terms()) {
        g.dx = std::max(g.dx, k.first);
        g.dy = std::max(g.dy, k.second);
    }
    g.c.assign(static_cast<std::size_t>(g.dx + 1) * (g.dy + 1), ring.zero());
    ring.lift(p.terms(), g.c, g.dy + 1, g.den);
    return g;
}

template <class R>
std::vector<std::vector<typename R::C>> pascal(const R& ring, int n) {
    std::vector<std::vector<typename R::C>> b(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        b[i].assign(static_cast<std::size_t>(i) + 1, ring.one());
        for (int k = 1; k < i; ++k) b[i][k] = ring.add(b[i - 1][k - 1], b[i - 1][k]);
    }
    return b;
}

template <class R>
std::vector<typename R::C> power_table(const R& ring, const typename R::C& base, int n) {
    std::vector<typename R::C> t(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k) t[k] = ring.mul(t[k - 1], base);
    return t;
}

// x <- x + s
template <class R>
void shift_x(const R& ring, SGrid<R>& g, const typename R::Param& s) {
    if (ring.is_zero(s.n) || g.dx == 0) return;
    const int dx = g.dx, dy = g.dy;
    const auto binom = pascal(ring, dx);
    const auto pn = power_table(ring, s.n, dx);
    const auto pd = power_table(ring, s.d, dx);
    std::vector<typename R::C> out(g.c.size(), ring.zero());
    for (int ip = 0; ip <= dx; ++ip)
        for (int i = 0; i <= ip; ++i) {
            // weight of x^ip contributing to x^i, over the common den d^dx
            const auto w = ring.mul(ring.mul(binom[ip][i], pn[ip - i]), pd[dx - ip + i]);
            if (ring.is_zero(w)) continue;
            for (int j = 0; j <= dy; ++j) {
                const auto& src = g.at(ip, j);
                if (!ring.is_zero(src))
                    ring.addmul(out[static_cast<std::size_t>(i) * (dy + 1) + j], src, w);
            }
        }
    g.c = std::move(out);
    g.den = ring.mul(g.den, pd[dx]);
}

// y <- y + s
template <class R>
void shift_y(const R& ring, SGrid<R>& g, const typename R::Param& s) {
    if (ring.is_zero(s.n) || g.dy == 0) return;
    const int dx = g.dx, dy = g.dy;
    const auto binom = pascal(ring, dy);
    const auto pn = power_table(ring, s.n, dy);
    const auto pd = power_table(ring, s.d, dy);
    std::vector<typename R::C> out(g.c.size(), ring.zero());
    for (int jp = 0; jp <= dy; ++jp)
        for (int j = 0; j <= jp; ++j) {
            const auto w = ring.mul(ring.mul(binom[jp][j], pn[jp - j]), pd[dy - jp + j]);
            if (ring.is_zero(w)) continue;
            for (int i = 0; i <= dx; ++i) {
                const auto& src = g.at(i, jp);
                if (!ring.is_zero(src))
                    ring.addmul(out[static_cast<std::size_t>(i) * (dy + 1) + j], src, w);
            }
        }
    g.c = std::move(out);
    g.den = ring.mul(g.den, pd[dy]);
}

// y <- m*x + y, so x-degrees grow by the y-degree
template <class R>
void shear_y(const R& ring, SGrid<R>& g, const typename R::Param& m) {
    if (ring.is_zero(m.n) || g.dy == 0) return;
    const int dx = g.dx, dy = g.dy;
    const int ndx = dx + dy;
    const auto binom = pascal(ring, dy);
    const auto pn = power_table(ring, m.n, dy);
    const auto pd = power_table(ring, m.d, dy);
    std::vector<typename R::C> out(static_cast<std::size_t>(ndx + 1) * (dy + 1), ring.zero());
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j) {
            const auto& src = g.at(i, j);
            if (ring.is_zero(src)) continue;
            for (int k = 0; k <= j; ++k) {
                const auto w = ring.mul(ring.mul(binom[j][k], pn[j - k]), pd[dy - j + k]);
                ring.addmul(out[static_cast<std::size_t>(i + j - k) * (dy + 1) + k], src, w);
            }
        }
    g.dx = ndx;
    g.c = std::move(out);
    g.den = ring.mul(g.den, pd[dy]);
}

// x <- x + r*y, so y-degrees grow by the x-degree
template <class R>
void shear_x(const R& ring, SGrid<R>& g, const typename R::Param& r) {
    if (ring.is_zero(r.n) || g.dx == 0) return;
    const int dx = g.dx, dy = g.dy;
    const int ndy = dy + dx;
    const auto binom = pascal(ring, dx);
    const auto pn = power_table(ring, r.n, dx);
    const auto pd = power_table(ring, r.d, dx);
    std::vector<typename R::C> out(static_cast<std::size_t>(dx + 1) * (ndy + 1), ring.zero());
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j) {
            const auto& src = g.at(i, j);
            if (ring.is_zero(src)) continue;
            for (int k = 0; k <= i; ++k) {
                const auto w = ring.mul(ring.mul(binom[i][k], pn[i - k]), pd[dx - i + k]);
                ring.addmul(out[static_cast<std::size_t>(k) * (ndy + 1) + (j + i - k)], src, w);
            }
        }
    g.dy = ndy;
    g.c = std::move(out);
    g.den = ring.mul(g.den, pd[dx]);
}

// x <- a*x, y <- q*y
template <class R>
void scale_xy(const R& ring, SGrid<R>& g, const typename R::Param& a,
              const typename R::Param& q) {
    const int dx = g.dx, dy = g.dy;
    const bool ax_trivial = ring.is_one(a.n) && ring.is_one(a.d);
    const bool qy_trivial = ring.is_one(q.n) && ring.is_one(q.d);
    if (ax_trivial && qy_trivial) return;
    const auto an = power_table(ring, a.n, dx);
    const auto ad = power_table(ring, a.d, dx);
    const auto qn = power_table(ring, q.n, dy);
    const auto qd = power_table(ring, q.d, dy);
    for (int i = 0; i <= dx; ++i) {
        const auto wx = ring.mul(an[i], ad[dx - i]);
        for (int j = 0; j <= dy; ++j) {
            auto& cell = g.at(i, j);
            if (ring.is_zero(cell)) continue;
            cell = ring.mul(ring.mul(cell, wx), ring.mul(qn[j], qd[dy - j]));
        }
    }
    g.den = ring.mul(g.den, ring.mul(ad[dx], qd[dy]));
}

template <class R>
void transpose(const R& ring, SGrid<R>& g) {
    std::vector<typename R::C> out(g.c.size(), ring.zero());
    for (int i = 0; i <= g.dx; ++i)
        for (int j = 0; j <= g.dy; ++j)
            out[static_cast<std::size_t>(j) * (g.dx + 1) + i] = std::move(g.at(i, j));
    std::swap(g.dx, g.dy);
    g.c = std::move(out);
}

template <class R>
std::vector<std::pair<BiPoly::Key, Scalar>> grid_emit(const R& ring, const SGrid<R>& g,
                                                      const FieldSpec& f) {
    std::vector<std::pair<BiPoly::Key, Scalar>> out;
    for (int i = 0; i <= g.dx; ++i)
        for (int j = 0; j <= g.dy; ++j) {
            const auto& cell = g.at(i, j);
            if (!ring.is_zero(cell))
                out.emplace_back(BiPoly::Key{i, j}, ring.make_scalar(cell, g.den, f));
        }
    return out;
}

// p(a*x + b*y + e, c*x + d*y + h): translation first, then the linear part as
// a shear / scale / shear (or swap) ladder
template <class R>
BiPoly affine_subst_impl(const R& ring, const BiPoly& p, const Scalar& a, const Scalar& b,
                         const Scalar& e, const Scalar& c, const Scalar& d, const Scalar& h) {
    SGrid<R> g = grid_load(ring, p);
    shift_x(ring, g, ring.param(e));
    shift_y(ring, g, ring.param(h));
    if (!a.is_zero()) {
        shear_y(ring, g, ring.param(c / a));
        scale_xy(ring, g, ring.param(a), ring.param(d - c * b / a));
        shear_x(ring, g, ring.param(b / a));
    } else {
        // a == 0 and c != 0: route x through the second component
        transpose(ring, g);
        scale_xy(ring, g, ring.param(c), ring.param(b));
        shear_x(ring, g, ring.param(d / c));
    }
    return BiPoly::from_terms(p.field(), grid_emit(ring, g, p.field()));
}

// p(alpha*x + beta, v): an x-only affine pass, then one Horner ladder in the
// y-exponent with the precomputed substitute v
template <class R>
BiPoly xlin_subst_impl(const R& ring, const BiPoly& p, const Scalar& alpha, const Scalar& beta,
                       const BiPoly& v) {
    const FieldSpec f = p.field();
    SGrid<R> g = grid_load(ring, p);
    shift_x(ring, g, ring.param(beta));
    scale_xy(ring, g, ring.param(alpha), ring.unit_param());
    auto terms = grid_emit(ring, g, f);
    std::map<int, std::vector<std::pair<BiPoly::Key, Scalar>>> cols; // y-exponent -> x-terms
    for (auto& [k, c] : terms) cols[k.second].emplace_back(BiPoly::Key{k.first, 0}, std::move(c));
    BiPoly res = BiPoly::zero(f);
    int cur = -1;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        BiPoly col = BiPoly::from_terms(f, std::move(it->second));
        if (cur < 0)
            res = std::move(col);
        else
            res = res * v.pow(cur - it->first) + col;
        cur = it->first;
    }
    if (cur > 0) res = res * v.pow(cur);
    return res;
}

BiPoly affine_subst(const BiPoly& p, const Scalar& a, const Scalar& b, const Scalar& e,
                    const Scalar& c, const Scalar& d, const Scalar& h) {
    if (p.field().is_rationals()) return affine_subst_impl(QSubstRing{}, p, a, b, e, c, d, h);
    return affine_subst_impl(PSubstRing{p.field().p}, p, a, b, e, c, d, h);
}

BiPoly xlin_subst(const BiPoly& p, const Scalar& alpha, const Scalar& beta, const BiPoly& v) {
    if (p.field().is_rationals()) return xlin_subst_impl(QSubstRing{}, p, alpha, beta, v);
    return xlin_subst_impl(PSubstRing{p.field().p}, p, alpha, beta, v);
}

} // namespace

BiPoly bipoly_subst(const BiPoly& p, const BiPoly& u, const BiPoly& v) {
    require(p.field() == u.field() && p.field() == v.field(), "FieldMismatch",
            "substitution over different fields");
    const FieldSpec f = p.field();
    if (p.is_zero()) return BiPoly::zero(f);

    // single-monomial substitutes: a pure exponent remap
    if (u.terms().size() == 1 && v.terms().size() == 1) {
        const auto& [ku, cu] = *u.terms().begin();
        const auto& [kv, cv] = *v.terms().begin();
        std::map<BiPoly::Key, Scalar> acc;
        for (const auto& [k, c] : p.terms()) {
            const BiPoly::Key key{k.first * ku.first + k.second * kv.first,
                                  k.first * ku.second + k.second * kv.second};
            const Scalar val = c * cu.pow(k.first) * cv.pow(k.second);
            auto [it, fresh] = acc.emplace(key, val);
            if (!fresh) it->second = it->second + val;
        }
        std::vector<std::pair<BiPoly::Key, Scalar>> terms(acc.begin(), acc.end());
        return BiPoly::from_terms(f, std::move(terms));
    }

    const int du = u.total_degree();
    const int dv = v.total_degree();
    if (du <= 1 && dv <= 1) {
        const Scalar a = u.coeff(1, 0), b = u.coeff(0, 1), e = u.coeff(0, 0);
        const Scalar c = v.coeff(1, 0), d = v.coeff(0, 1), h = v.coeff(0, 0);
        if (!a.is_zero() || !c.is_zero()) return affine_subst(p, a, b, e, c, d, h);
    }
    if (u.depends_only_on_x() && du <= 1 && !u.coeff(1, 0).is_zero())
        return xlin_subst(p, u.coeff(1, 0), u.coeff(0, 0), v);

    // general case: group by x-exponent, Horner in u of polynomials Horner'd in v
    std::map<int, std::map<int, Scalar>> by_x;
    for (const auto& [k, c] : p.terms()) by_x[k.first][k.second] = c;
    std::vector<std::pair<int, BiPoly>> rows; // (i, sum_j c_ij v^j)
    for (const auto& [i, col] : by_x) {
        int maxj = col.rbegin()->first;
        BiPoly row = BiPoly::zero(f);
        for (int j = maxj; j >= 0; --j) {
            row = row * v;
            auto it = col.find(j);
            if (it != col.end()) row = row + BiPoly::constant(it->second);
        }
        rows.emplace_back(i, row);
    }
    // Horner over descending i with gap powers of u
    BiPoly result = BiPoly::zero(f);
    int cur = -1;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        const int i = it->first;
        if (cur < 0) {
            result = it->second;
            cur = i;
        } else {
            result = result * u.pow(cur - i) + it->second;
            cur = i;
        }
    }
    if (cur > 0) result = result * u.pow(cur);
    return result;
}

bool proportional(const BiPoly& p, const BiPoly& q, Scalar& c_out) {
    if (q.is_zero()) return false;
    if (p.is_zero()) return false;
    // candidate ratio from q's first term, then verify exactly
    const auto& [k0, q0] = *q.terms().begin();
    const Scalar p0 = p.coeff(k0.first, k0.second);
    if (p0.is_zero()) return false;
    const Scalar c = p0 / q0;
    if (q.scaled(c) == p) {
        c_out = c;
        return true;
    }
    return false;
}

} // namespace planekit
