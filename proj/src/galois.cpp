#include "ssp/galois.hpp"

#include "ssp/errors.hpp"

namespace ssp {

const char* status_name(SurjectivityStatus s) {
    return s == SurjectivityStatus::Surjective ? "Surjective" : "Inconclusive";
}

SurjectivityVerdict serre_check(const WeierstrassCurve& E, i64 p, i64 ell_bound) {
    if (!is_supersingular(E, p)) throw Error(ErrorKind::NotSupersingular, "p = " + std::to_string(p));
    if (E.conductor <= 0) throw Error(ErrorKind::InvalidConfig, "serre_check needs the conductor");
    SurjectivityVerdict out;
    auto cond = factor(E.conductor);

    if (p == 3) {
        for (const auto& [q, e] : factor(E.disc)) {
            int v = vp(E.disc, static_cast<i64>(q.get_si()));
            if (v % 3 != 0) {
                out.reasons.push_back({"cube", q.get_si(), v, "ord_q(disc) is not divisible by 3"});
                break;
            }
        }
    }
    bool squarefree = true;
    for (const auto& [l, e] : cond)
        if (e > 1) squarefree = false;
    if (p >= 5 && squarefree)
        out.reasons.push_back({"squarefree", 0, E.conductor, "conductor is squarefree"});
    Rat j(E.j_num, E.j_den);
    for (const auto& [l, e] : cond) {
        if (e != 1) continue;
        int v = vp(j, l);
        if (v % p != 0) {
            out.reasons.push_back({"multiplicative", l, v, "l || N and ord_l(j) is prime to p"});
            break;
        }
    }
    for (i64 l : primes_up_to(ell_bound)) {
        if (l == p || E.conductor % l == 0 || mpz_divisible_ui_p(E.disc.get_mpz_t(), static_cast<unsigned long>(l))) continue;
        i64 a = count_points_mod(E, l);
        if (modn(a, p) == 0) continue;
        i64 disc = a * a - 4 * l;
        if (modn(disc, p) == 0) continue;
        if (legendre(modn(disc, p), p) == 1) {
            out.reasons.push_back({"frobenius", l, a, "a_l^2 - 4l is a nonzero square mod p"});
            break;
        }
    }
    if (squarefree && p >= 7)
        out.reasons.push_back({"semistable", 0, E.conductor, "semistable curve and p >= 7"});
    if (!out.reasons.empty()) out.status = SurjectivityStatus::Surjective;
    return out;
}

}  // namespace ssp
