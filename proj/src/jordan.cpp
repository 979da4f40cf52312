#include "sgenus/jordan.hpp"

#include "sgenus/errors.hpp"
#include "sgenus/int_math.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace sgenus {

namespace {

constexpr i64 INF_ORD = std::numeric_limits<i64>::max() / 2;

i64 ord_mpz(mpz_class n, i64 p) {
    if (n == 0) return INF_ORD;
    i64 k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        n /= static_cast<unsigned long>(p);
        ++k;
    }
    return k;
}

i64 ord_rat(const Rational& x, i64 p) {
    if (x.is_zero()) return INF_ORD;
    return ord_mpz(x.num(), p) - ord_mpz(x.den(), p);
}

i64 legendre_rat(const Rational& x, i64 p) {
    mpz_class pm{static_cast<long>(p)};
    mpz_class n = x.num() % pm;
    mpz_class d = x.den() % pm;
    return legendre(n.get_si(), p) * legendre(d.get_si(), p);
}

using Mat = std::array<std::array<Rational, 3>, 3>;

Mat gram_matrix(const TernaryForm& q) {
    Rational half{1, 2};
    Mat g;
    g[0][0] = Rational{q.a};
    g[1][1] = Rational{q.b};
    g[2][2] = Rational{q.c};
    g[0][1] = g[1][0] = Rational{q.t} * half;
    g[0][2] = g[2][0] = Rational{q.s} * half;
    g[1][2] = g[2][1] = Rational{q.r} * half;
    return g;
}

Mat doubled_gram_matrix(const TernaryForm& q) {
    auto m = q.doubled_gram();
    Mat g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g[i][j] = Rational{m[i][j]};
    return g;
}

// Symmetric pivot elimination of row/column `piv` against the other active
// indices.  Entries of row `piv` are untouched until the final clearing.
void eliminate_pivot(Mat& g, const std::vector<int>& act, int piv) {
    Rational d = g[piv][piv];
    std::array<Rational, 3> row;
    for (int j : act) row[j] = g[piv][j];
    for (int j : act) {
        if (j == piv) continue;
        for (int k : act) {
            if (k == piv) continue;
            g[j][k] -= row[j] * row[k] / d;
        }
    }
    for (int j : act) {
        if (j == piv) continue;
        g[piv][j] = Rational{0};
        g[j][piv] = Rational{0};
    }
}

std::array<i64, 32> histogram_mod32(const TernaryForm& q) {
    std::array<i64, 32> h{};
    for (i64 x = 0; x < 32; ++x)
        for (i64 y = 0; y < 32; ++y)
            for (i64 z = 0; z < 32; ++z) {
                i64 v = q.evaluate(x, y, z) % 32;
                if (v < 0) v += 32;
                ++h[static_cast<size_t>(v)];
            }
    return h;
}

} // namespace

std::array<Rational, 3> diagonalize_at_odd_prime(const TernaryForm& q, i64 p) {
    if (p == 2 || !is_prime(p)) throw InvalidPrime("diagonalization requires an odd prime");
    if (q.gram_det4() == 0) throw PreconditionViolated("degenerate form");
    Mat g = gram_matrix(q);
    std::vector<int> act{0, 1, 2};
    std::array<Rational, 3> out;
    int step = 0;
    while (!act.empty()) {
        i64 diag_min = INF_ORD, off_min = INF_ORD;
        int di = -1, oi = -1, oj = -1;
        for (int i : act) {
            i64 o = ord_rat(g[i][i], p);
            if (o < diag_min) {
                diag_min = o;
                di = i;
            }
            for (int j : act) {
                if (j <= i) continue;
                i64 o2 = ord_rat(g[i][j], p);
                if (o2 < off_min) {
                    off_min = o2;
                    oi = i;
                    oj = j;
                }
            }
        }
        if (off_min < diag_min) {
            // basis change e_i -> e_i + e_j brings the minimum to the diagonal
            for (int k : act)
                if (k != oi) g[oi][k] += g[oj][k];
            g[oi][oi] += g[oi][oj] + g[oj][oi];
            for (int k : act)
                if (k != oi) g[k][oi] = g[oi][k];
            di = oi;
        }
        Rational d = g[di][di];
        if (ord_rat(d, p) < 0 || d.is_zero())
            throw PreconditionViolated("local diagonalization pivot failure");
        eliminate_pivot(g, act, di);
        out[static_cast<size_t>(step++)] = d;
        act.erase(std::find(act.begin(), act.end(), di));
    }
    return out;
}

namespace {

std::vector<JordanBlock> jordan_blocks_two(const TernaryForm& q) {
    Mat g = doubled_gram_matrix(q);
    std::vector<int> act{0, 1, 2};
    std::vector<JordanBlock> raw;
    while (!act.empty()) {
        i64 diag_min = INF_ORD, off_min = INF_ORD;
        int di = -1, oi = -1, oj = -1;
        for (int i : act) {
            i64 o = ord_rat(g[i][i], 2);
            if (o < diag_min) {
                diag_min = o;
                di = i;
            }
            for (int j : act) {
                if (j <= i) continue;
                i64 o2 = ord_rat(g[i][j], 2);
                if (o2 < off_min) {
                    off_min = o2;
                    oi = i;
                    oj = j;
                }
            }
        }
        if (diag_min <= off_min) {
            raw.push_back(JordanBlock{diag_min, 1, 0, false});
            eliminate_pivot(g, act, di);
            act.erase(std::find(act.begin(), act.end(), di));
        } else {
            raw.push_back(JordanBlock{off_min, 2, 0, true});
            if (act.size() == 3) {
                int k = -1;
                for (int i : act)
                    if (i != oi && i != oj) k = i;
                Rational det = g[oi][oi] * g[oj][oj] - g[oi][oj] * g[oi][oj];
                Rational x1 = (g[oj][oj] * g[oi][k] - g[oi][oj] * g[oj][k]) / det;
                Rational x2 = (g[oi][oi] * g[oj][k] - g[oi][oj] * g[oi][k]) / det;
                g[k][k] -= x1 * g[oi][k] + x2 * g[oj][k];
                g[oi][k] = g[k][oi] = g[oj][k] = g[k][oj] = Rational{0};
            }
            act.erase(std::find(act.begin(), act.end(), oi));
            act.erase(std::find(act.begin(), act.end(), oj));
        }
    }
    // merge blocks of equal scale; a block is even only if no odd 1x1 joins it
    std::map<i64, std::pair<int, bool>> merged;
    for (const JordanBlock& b : raw) {
        auto& cell = merged.emplace(b.scale_exp, std::make_pair(0, true)).first->second;
        cell.first += b.dim;
        cell.second = cell.second && b.type_even;
    }
    std::vector<JordanBlock> out;
    for (auto& [v, cell] : merged) out.push_back(JordanBlock{v, cell.first, 0, cell.second});
    return out;
}

} // namespace

JordanSymbol jordan_symbol(const TernaryForm& q, i64 p) {
    if (!is_prime(p)) throw InvalidPrime("jordan_symbol requires a prime, got " + std::to_string(p));
    if (q.gram_det4() == 0) throw PreconditionViolated("degenerate form");
    JordanSymbol sym;
    sym.p = p;
    if (p == 2) {
        sym.blocks = jordan_blocks_two(q);
        return sym;
    }
    auto d = diagonalize_at_odd_prime(q, p);
    std::map<i64, std::pair<int, Rational>> groups;
    for (const Rational& di : d) {
        i64 v = ord_rat(di, p);
        if (v < 0) throw PreconditionViolated("non-integral local diagonal entry");
        Rational unit = di / Rational{mpz_class{static_cast<long>(p)}}.pow(static_cast<int>(v));
        auto it = groups.emplace(v, std::make_pair(0, Rational{1})).first;
        it->second.first += 1;
        it->second.second *= unit;
    }
    for (auto& [v, cell] : groups)
        sym.blocks.push_back(JordanBlock{v, cell.first, legendre_rat(cell.second, p), false});
    return sym;
}

bool same_genus(const TernaryForm& q1, const TernaryForm& q2) {
    if (!q1.is_positive_definite() || !q2.is_positive_definite())
        throw NotPositiveDefinite("same_genus requires positive definite forms");
    if (q1.gram_det4() != q2.gram_det4()) return false;
    for (auto [p, e] : factorize(q1.gram_det4()))
        if (p != 2 && jordan_symbol(q1, p) != jordan_symbol(q2, p)) return false;
    if (jordan_symbol(q1, 2) != jordan_symbol(q2, 2)) return false;
    return histogram_mod32(q1) == histogram_mod32(q2);
}

} // namespace sgenus
