#include "planekit/matpoly.hpp"

#include <sstream>

#include "planekit/errors.hpp"

namespace planekit {

EFactor::EFactor(ProjPoint d, UniPoly f_) : delta(std::move(d)), f(std::move(f_)) {
    require(!f.is_zero(), "BadShape", "trivial coefficient in unipotent factor");
    require(delta.field() == f.field(), "FieldMismatch", "line and coefficient over different fields");
}

MatPoly2 EFactor::to_mat() const {
    const FieldSpec& fld = f.field();
    Mat2 e = e_delta(delta);
    UniPoly tf = f.shifted(1); // t * f(t)
    MatPoly2 m = MatPoly2::identity(fld);
    m.a = m.a + tf.scaled(e.a);
    m.b = m.b + tf.scaled(e.b);
    m.c = m.c + tf.scaled(e.c);
    m.d = m.d + tf.scaled(e.d);
    return m;
}

MatPoly2 EWord::recompose(const FieldSpec& f) const {
    MatPoly2 acc = MatPoly2::identity(f);
    for (const EFactor& e : factors) acc = acc * e.to_mat();
    return acc;
}

EWord e_word_normalize(std::vector<EFactor> factors) {
    EWord out;
    for (EFactor& e : factors) {
        if (e.f.is_zero()) continue;
        if (!out.factors.empty() && out.factors.back().delta == e.delta) {
            UniPoly sum = out.factors.back().f + e.f;
            out.factors.pop_back();
            if (!sum.is_zero()) out.factors.emplace_back(e.delta, sum);
            continue;
        }
        out.factors.push_back(std::move(e));
    }
    return out;
}

bool is_in_GL1(const MatPoly2& g) {
    if (!g.eval0().is_identity()) return false;
    return g.det() == UniPoly::one(g.field());
}

Scalar bracket(const Mat2& a, const Mat2& b) {
    return (a + b).det() - a.det() - b.det();
}

namespace {

// image contained in the given line, i.e. both columns lie on it
bool image_within(const Mat2& m, const ProjPoint& delta) {
    return delta.contains(m.a, m.c) && delta.contains(m.b, m.d);
}

Scalar entry_ratio(const Mat2& num, const Mat2& den) {
    std::array<std::pair<const Scalar*, const Scalar*>, 4> ent = {{
        {&num.a, &den.a}, {&num.b, &den.b}, {&num.c, &den.c}, {&num.d, &den.d}}};
    for (auto& [n, d] : ent) {
        if (!d->is_zero()) return *n / *d;
    }
    internal_error("ratio against the zero matrix");
}

} // namespace

EWord e_generation_factorize_traced(const MatPoly2& g, std::vector<int>& degree_trace) {
    require(is_in_GL1(g), "NotInGL1",
            "matrix is not unimodular with identity constant term: " + g.str());
    const FieldSpec& fld = g.field();
    degree_trace.clear();
    degree_trace.push_back(g.degree());

    std::vector<EFactor> raw;
    MatPoly2 cur = g;
    while (cur.degree() >= 1) {
        int big = cur.degree();
        Mat2 top = cur.coeff_mat(big);
        if (!top.det().is_zero()) internal_error("top coefficient has full rank: " + cur.str());
        ProjPoint delta = ProjPoint::image_line(top);
        Mat2 e = e_delta(delta);

        // Largest index whose coefficient matrix has image off the line;
        // index 0 qualifies because the constant term stays the identity.
        int low = big - 1;
        while (low > 0 && image_within(cur.coeff_mat(low), delta)) --low;
        Mat2 lead = e * cur.coeff_mat(low);
        if (lead.is_zero()) internal_error("pivot coefficient collapsed under e: " + cur.str());
        Scalar c = entry_ratio(top, lead);
        if (lead.scaled(c) != top) internal_error("top coefficient is not a multiple of the pivot");

        // Multiply by (id - c t^(big-low) e) on the left; e has square zero,
        // so this inverts the factor being split off.
        UniPoly shift = UniPoly::monomial(c, big - low);
        MatPoly2 sub(fld);
        sub.a = shift.scaled(e.a);
        sub.b = shift.scaled(e.b);
        sub.c = shift.scaled(e.c);
        sub.d = shift.scaled(e.d);
        MatPoly2 next = cur - sub * cur;
        if (next.degree() >= big) internal_error("degree failed to drop: " + cur.str());
        raw.emplace_back(delta, UniPoly::monomial(c, big - low - 1));
        degree_trace.push_back(next.degree());
        cur = next;
    }
    if (!cur.is_identity()) internal_error("residue after factorization is not the identity");

    EWord word = e_word_normalize(std::move(raw));
    if (word.recompose(fld) != g) internal_error("factor word does not recompose");
    return word;
}

EWord e_generation_factorize(const MatPoly2& g) {
    std::vector<int> trace;
    return e_generation_factorize_traced(g, trace);
}

int vector_degree(const PolyVector& v) {
    require(!v.is_zero(), "ZeroVector", "degree of the zero vector");
    return std::max(v.x.degree(), v.y.degree());
}

std::array<Scalar, 2> vector_hc(const PolyVector& v) {
    require(!v.is_zero(), "ZeroVector", "zero vector has no head coefficient");
    int d = vector_degree(v);
    return {v.x.coeff(d), v.y.coeff(d)};
}

bool omega_member(const PolyVector& v, const ProjPoint& delta) {
    if (v.is_zero()) return false;
    auto hc = vector_hc(v);
    return delta.contains(hc[0], hc[1]);
}

PingPongReport verify_pingpong(const std::map<ProjPoint, std::vector<EFactor>>& samples,
                               const std::map<ProjPoint, std::vector<PolyVector>>& vectors) {
    PingPongReport rep;
    for (const auto& [delta, fs] : samples) {
        for (const EFactor& e : fs) {
            require(e.delta == delta, "BadShape", "factor filed under the wrong line");
        }
    }
    for (const auto& [delta, vs] : vectors) {
        for (const PolyVector& v : vs) {
            require(omega_member(v, delta), "BadShape",
                    "vector " + v.str() + " not in the cone over " + delta.str());
        }
    }
    for (const auto& [dsrc, vs] : vectors) {
        for (const auto& [ddst, fs] : samples) {
            if (ddst == dsrc) continue;
            for (const EFactor& e : fs) {
                MatPoly2 m = e.to_mat();
                for (const PolyVector& v : vs) {
                    PolyVector img = matpoly_apply(m, v);
                    ++rep.checks;
                    if (!omega_member(img, ddst)) {
                        std::ostringstream os;
                        os << "factor at " << ddst.str() << " with coefficient " << e.f.str()
                           << " maps " << v.str() << " from the cone over " << dsrc.str()
                           << " to " << img.str() << " which leaves the target cone";
                        rep.violations.push_back(os.str());
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace planekit
