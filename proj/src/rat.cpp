#include <srg/rat.hpp>

#include <srg/errors.hpp>

namespace srg {

Rat rat(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_int(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    return rat(rn, rd);
}

namespace {

// m <= c + sqrt(q)  <=>  m <= c  or  (m - c)^2 <= q
bool below_plus_sqrt(const Int& m, const Rat& c, const Rat& q) {
    Rat mr(m);
    if (mr <= c) return true;
    Rat diff = mr - c;
    return diff * diff <= q;
}

}  // namespace

Int floor_plus_sqrt(const Rat& c, const Rat& q) {
    if (q < 0) throw Error("floor_plus_sqrt: negative radicand");
    Int fq = floor_int(q);
    Int root;
    mpz_sqrt(root.get_mpz_t(), fq.get_mpz_t());
    Int m = floor_int(c) + root + 2;  // certainly above the answer
    while (!below_plus_sqrt(m, c, q)) --m;
    return m;
}

Int ceil_minus_sqrt(const Rat& c, const Rat& q) { return -floor_plus_sqrt(-c, q); }

}  // namespace srg
