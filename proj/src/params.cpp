#include <srg/params.hpp>

#include <srg/errors.hpp>

#include <cstdlib>
#include <sstream>

namespace srg {

namespace {

// Value a + b*sqrt(d) with rational a, b. Whenever d is a perfect square the
// surd is folded into the rational part at construction, so b != 0 implies d
// is not a square and sign comparisons below are exact.
struct Quad {
    Rat a;
    Rat b;
    Int d;
};

Quad quad(const Rat& a, const Rat& b, const Int& d) {
    if (b != 0) {
        if (auto r = rational_sqrt(Rat(d))) return {a + b * *r, Rat(0), d};
    }
    return {a, b, d};
}

Quad qadd(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b, x.d}; }
Quad qsub(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b, x.d}; }
Quad qmul(const Quad& x, const Quad& y) {
    return {x.a * y.a + x.b * y.b * Rat(x.d), x.a * y.b + x.b * y.a, x.d};
}
Quad qdiv(const Quad& x, const Quad& y) {
    Rat norm = y.a * y.a - y.b * y.b * Rat(y.d);
    if (norm == 0) throw Error("division by zero quadratic value");
    // multiply by the conjugate
    Quad conj{y.a, -y.b, y.d};
    Quad prod = qmul(x, conj);
    return {prod.a / norm, prod.b / norm, x.d};
}
Quad qconst(const Rat& a, const Int& d) { return {a, Rat(0), d}; }

int qsign(const Quad& x) {
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rat a2 = x.a * x.a, b2d = x.b * x.b * Rat(x.d);
    if (a2 == b2d) return 0;
    return a2 > b2d ? sa : sb;
}

std::string qstr(const Quad& x) {
    if (x.b == 0) return to_string(x.a);
    std::ostringstream os;
    if (x.a != 0) os << to_string(x.a) << (x.b > 0 ? " + " : " - ");
    else if (x.b < 0) os << "-";
    Rat ab = abs(x.b);
    if (ab != 1) os << to_string(ab) << "*";
    os << "sqrt(" << x.d.get_str() << ")";
    return os.str();
}

Int identity_lhs(long k, long lambda) { return Int(k) * (Int(k) - lambda - 1); }
Int identity_rhs(long v, long k, long mu) { return (Int(v) - k - 1) * mu; }

}  // namespace

SrgParams validate_params(long v, long k, long lambda, long mu) {
    if (v < 0 || k < 0 || lambda < 0 || mu < 0)
        throw RangeViolation("parameters must be nonnegative integers");
    if (k < 1) throw RangeViolation("valency k must be positive");
    if (v < k + 2)
        throw RangeViolation("v >= k+2 required (a non-adjacent pair must exist for mu)");
    if (lambda >= k) throw RangeViolation("lambda < k required");
    if (mu < 1) throw RangeViolation("mu must be positive");
    if (mu > k) throw RangeViolation("mu <= k required");
    Int lhs = identity_lhs(k, lambda);
    Int rhs = identity_rhs(v, k, mu);
    if (lhs != rhs)
        throw IdentityViolation("identity k(k-lambda-1) = (v-k-1)mu fails: " + lhs.get_str() +
                                    " != " + rhs.get_str(),
                                lhs, rhs);
    return SrgParams{v, k, lambda, mu};
}

IntersectionArray intersection_array(const SrgParams& p) {
    return IntersectionArray{p.k, p.k - p.lambda - 1, 1, p.mu, p.lambda, p.k - p.mu};
}

Spectrum spectrum(const SrgParams& p) {
    Spectrum s;
    s.disc = Int(p.lambda - p.mu) * Int(p.lambda - p.mu) + 4 * (Int(p.k) - p.mu);
    s.half_trace_num = p.lambda - p.mu;
    const long e = p.lambda - p.mu;
    if (mpz_perfect_square_p(s.disc.get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), s.disc.get_mpz_t());
        const long rt = root.get_si();
        // root and e always share parity: root^2 = e^2 + 4(k-mu)
        const long theta_p = (e + rt) / 2;
        const long theta_m = (e - rt) / 2;
        Rat f = rat(Int(-p.k) - Int(p.v - 1) * theta_m, Int(theta_p) - theta_m);
        Rat g = rat(Int(p.k) + Int(p.v - 1) * theta_p, Int(theta_p) - theta_m);
        if (!is_integer(f) || !is_integer(g) || f <= 0 || g <= 0)
            throw NonIntegralMultiplicity("multiplicities " + to_string(f) + " and " +
                                          to_string(g) + " are not positive integers");
        s.integral = true;
        s.theta_plus = theta_p;
        s.theta_minus = theta_m;
        s.mult_plus = f.get_num().get_si();
        s.mult_minus = g.get_num().get_si();
        if (Int(p.k) + Int(s.mult_plus) * theta_p + Int(s.mult_minus) * theta_m != 0)
            throw Error("internal: trace condition violated");
        if (1 + s.mult_plus + s.mult_minus != p.v)
            throw Error("internal: multiplicities do not sum to v");
    } else {
        // non-square discriminant: rational multiplicities require the
        // conference condition 2k + (v-1)(lambda-mu) = 0 with v odd
        if ((p.v - 1) % 2 != 0 || 2 * Int(p.k) + Int(p.v - 1) * e != 0)
            throw NonIntegralMultiplicity(
                "discriminant " + s.disc.get_str() +
                " is not a perfect square and the conference condition fails; "
                "multiplicities are irrational");
        s.integral = false;
        s.mult_plus = s.mult_minus = (p.v - 1) / 2;
    }
    return s;
}

std::string theta_string(const Spectrum& s, bool plus) {
    if (s.integral) return std::to_string(plus ? s.theta_plus : s.theta_minus);
    std::ostringstream os;
    os << "(" << s.half_trace_num << (plus ? "+" : "-") << "sqrt(" << s.disc.get_str()
       << "))/2";
    return os.str();
}

CosineSequence cosine_sequence(const SrgParams& p, long theta) {
    Spectrum spec = spectrum(p);
    if (!spec.integral)
        throw NonIntegralEigenvalue("conference parameters have irrational eigenvalues " +
                                    theta_string(spec, true) + ", " + theta_string(spec, false) +
                                    "; exact cosine sequences are only provided for integral "
                                    "eigenvalues");
    if (theta == p.k)
        throw NotAnEigenvalue("theta = k is the trivial eigenvalue (cosine sequence (1,1,1))");
    if (theta != spec.theta_plus && theta != spec.theta_minus)
        throw NotAnEigenvalue(std::to_string(theta) + " is not an eigenvalue; spectrum is {" +
                              std::to_string(p.k) + ", " + theta_string(spec, true) + ", " +
                              theta_string(spec, false) + "}");
    CosineSequence c;
    c.eigenvalue = theta;
    c.w0 = 1;
    c.w1 = rat(theta, p.k);
    const long b1 = p.k - p.lambda - 1;  // >= 1 once the identity holds with mu >= 1
    c.w2 = (Rat(theta - p.lambda) * c.w1 - 1) / b1;
    return c;
}

FeasibilityReport feasibility_report(long v, long k, long lambda, long mu) {
    if (v < 0 || k < 1 || lambda < 0 || lambda >= k || mu < 1 || mu > k || v < k + 2)
        throw RangeViolation("parameter ranges violated: need v >= k+2, 0 <= lambda < k, "
                             "1 <= mu <= k");
    FeasibilityReport rep;
    rep.v = v;
    rep.k = k;
    rep.lambda = lambda;
    rep.mu = mu;

    // identity
    Int lhs = identity_lhs(k, lambda), rhs = identity_rhs(v, k, mu);
    rep.identity_ok = lhs == rhs;
    rep.details.push_back({"identity", rep.identity_ok,
                           "k(k-lambda-1) = " + lhs.get_str() + ", (v-k-1)mu = " + rhs.get_str()});

    // eigenvalues as quadratic values over sqrt(disc)
    Int disc = Int(lambda - mu) * Int(lambda - mu) + 4 * (Int(k) - mu);
    const Rat e2 = rat(lambda - mu, 2);
    Quad r = quad(e2, rat(1, 2), disc);
    Quad s = quad(e2, rat(-1, 2), disc);
    Quad diff = qsub(r, s);

    // multiplicity integrality
    Quad f = qdiv(qsub(qconst(Rat(-k), disc), qmul(qconst(Rat(v - 1), disc), s)), diff);
    Quad g = qdiv(qadd(qconst(Rat(k), disc), qmul(qconst(Rat(v - 1), disc), r)), diff);
    bool f_int = f.b == 0 && is_integer(f.a) && f.a > 0;
    bool g_int = g.b == 0 && is_integer(g.a) && g.a > 0;
    rep.integrality_ok = f_int && g_int;
    rep.details.push_back({"multiplicity-integrality", rep.integrality_ok,
                           "f = " + qstr(f) + ", g = " + qstr(g)});

    // Krein conditions: both expressions must be <= 0
    Quad kq = qconst(Rat(k), disc);
    Quad one = qconst(Rat(1), disc);
    Quad two_rs = qmul(qconst(Rat(2), disc), qmul(r, s));
    Quad sp1 = qadd(s, one), rp1 = qadd(r, one);
    Quad k1 = qsub(qmul(rp1, qadd(qadd(kq, r), two_rs)), qmul(qadd(kq, r), qmul(sp1, sp1)));
    Quad k2 = qsub(qmul(sp1, qadd(qadd(kq, s), two_rs)), qmul(qadd(kq, s), qmul(rp1, rp1)));
    bool k1_ok = qsign(k1) <= 0, k2_ok = qsign(k2) <= 0;
    rep.krein_ok = k1_ok && k2_ok;
    rep.details.push_back({"krein-1", k1_ok, "(r+1)(k+r+2rs) - (k+r)(s+1)^2 = " + qstr(k1)});
    rep.details.push_back({"krein-2", k2_ok, "(s+1)(k+s+2rs) - (k+s)(r+1)^2 = " + qstr(k2)});

    // absolute bound v <= f(f+3)/2 for each nontrivial multiplicity
    Quad half = qconst(rat(1, 2), disc);
    auto abs_bound = [&](const Quad& mult) {
        Quad expr = qsub(qmul(half, qmul(mult, qadd(mult, qconst(Rat(3), disc)))),
                         qconst(Rat(v), disc));
        return std::pair<bool, std::string>{qsign(expr) >= 0,
                                            "f(f+3)/2 - v = " + qstr(expr) + " for f = " + qstr(mult)};
    };
    auto [b1_ok, b1_detail] = abs_bound(f);
    auto [b2_ok, b2_detail] = abs_bound(g);
    rep.absolute_bound_ok = b1_ok && b2_ok;
    rep.details.push_back({"absolute-bound-1", b1_ok, b1_detail});
    rep.details.push_back({"absolute-bound-2", b2_ok, b2_detail});
    return rep;
}

FeasibilityReport feasibility_report(const SrgParams& p) {
    return feasibility_report(p.v, p.k, p.lambda, p.mu);
}

}  // namespace srg
