#include "dworkhg/fuchsian.hpp"

#include <stdexcept>

namespace dworkhg {

namespace {

bool is_companion(const RFMatrix& m) {
    if (!m.is_square()) return false;
    int k = m.rows();
    const RationalFunction one{Rational(1)};
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (j == i + 1) {
                if (!(m.at(i, j) == one)) return false;
            } else if (!m.at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

// Multiplicity of (x - point) in p.
int root_multiplicity(const Polynomial& p, const Rational& point) {
    Polynomial f = p;
    Polynomial lin({-point, Rational(1)});
    int mult = 0;
    while (!f.is_zero() && f.eval(point).is_zero()) {
        f = f.exact_div(lin);
        ++mult;
    }
    return mult;
}

}  // namespace

RFMatrix cyclic_change_of_basis(const SystemMatrix& a) {
    if (!a.mat.is_square())
        throw Error(ErrorCode::DimensionMismatch, "system matrix must be square");
    int k = a.mat.rows();
    RFMatrix s(k, k);
    s.at(0, 0) = RationalFunction(Rational(1));
    for (int m = 0; m + 1 < k; ++m) {
        // row_{m+1} = d(row_m)/dlambda + row_m * A
        for (int j = 0; j < k; ++j) {
            RationalFunction v = s.at(m, j).derivative();
            for (int l = 0; l < k; ++l) {
                if (s.at(m, l).is_zero() || a.mat.at(l, j).is_zero()) continue;
                v += s.at(m, l) * a.mat.at(l, j);
            }
            s.at(m + 1, j) = v;
        }
    }
    if (!s.is_invertible())
        throw Error(ErrorCode::CyclicVectorFailure,
                    "first basis vector is not cyclic (singular change of basis)");
    return s;
}

RFMatrix companion_system(const SystemMatrix& a, const RFMatrix& s) {
    RFMatrix s_inv = s.inverse();  // SingularMatrix when not invertible
    RFMatrix result = (s * a.mat + s.derivative()) * s_inv;
    if (!is_companion(result))
        throw std::logic_error("cyclic change of basis did not produce a companion matrix");
    return result;
}

RegularizedSystem regularize(const RFMatrix& companion, int n) {
    if (!is_companion(companion))
        throw std::invalid_argument("regularize expects a companion-form matrix");
    int k = companion.rows();
    RegularizedSystem reg;
    reg.var = Var::Lambda;
    reg.n = n;
    reg.N = RFMatrix(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const RationalFunction& e = companion.at(i, j);
            if (!e.is_zero()) reg.N.at(i, j) = e.times_power(i - j + 1);
            if (i == j && i > 0) reg.N.at(i, j) += RationalFunction(Rational(i));
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (!reg.N.at(i, j).is_zero() && reg.N.at(i, j).den().eval(Rational(0)).is_zero())
                throw Error(ErrorCode::StillSingular,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") keeps a pole at 0");
    return reg;
}

RegularizedSystem change_variable(const RegularizedSystem& r, int n) {
    if (r.var != Var::Lambda)
        throw std::invalid_argument("change_variable expects a system in lambda");
    int k = r.N.rows();
    RegularizedSystem out;
    out.var = Var::Z;
    out.n = n;
    out.N = RFMatrix(k, k);
    RationalFunction inv_n{Rational(1, n)};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out.N.at(i, j) = r.N.at(i, j).deflate(n) * inv_n;
    return out;
}

RFMatrix residue_zero(const RegularizedSystem& r) {
    if (r.var != Var::Z) throw std::invalid_argument("residue_zero expects a system in z");
    int k = r.N.rows();
    RFMatrix res(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            res.at(i, j) = RationalFunction(r.N.at(i, j).eval(Rational(0)));
    return res;
}

RFMatrix residue_infinity(const RegularizedSystem& r) {
    if (r.var != Var::Z) throw std::invalid_argument("residue_infinity expects a system in z");
    int k = r.N.rows();
    RFMatrix res(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            res.at(i, j) = RationalFunction(-limit_at_infinity(r.N.at(i, j)));
    return res;
}

RFMatrix residue_one(const RegularizedSystem& r) {
    if (r.var != Var::Z) throw std::invalid_argument("residue_one expects a system in z");
    const Rational one(1);
    int k = r.N.rows();
    RFMatrix res(k, k);
    Polynomial lin({-one, Rational(1)});  // z - 1
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const RationalFunction& e = r.N.at(i, j);
            if (e.is_zero()) continue;
            int mult = root_multiplicity(e.den(), one);
            if (mult == 0) continue;  // analytic at 1, residue 0
            if (mult > 1)
                throw Error(ErrorCode::HigherOrderPole,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") has a pole of order " + std::to_string(mult) + " at z = 1");
            // residue of (1/z) N at 1: num(1) / (1 * (den/(z-1))(1))
            Polynomial reduced_den = e.den().exact_div(lin);
            res.at(i, j) = RationalFunction(e.num().eval(one) / reduced_den.eval(one));
        }
    return res;
}

}  // namespace dworkhg
