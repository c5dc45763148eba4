#include "cmgr/symfun.hpp"

#include <algorithm>
#include <map>

namespace cmgr {

namespace {

// h_0..h_kmax as polynomials in t_1..t_m, from E' = A'E with A = -sum t_i z^i.
std::vector<MultiPoly> complete_homogeneous(int kmax, int m) {
    std::vector<MultiPoly> h;
    h.push_back(MultiPoly::constant(m, Rational(1)));
    for (int k = 1; k <= kmax; ++k) {
        MultiPoly acc(m);
        for (int j = 1; j <= std::min(k, m); ++j)
            acc = acc + h[static_cast<size_t>(k - j)] * MultiPoly::variable(m, j - 1, Rational(-j));
        h.push_back(acc * (Rational(1) / Rational(k)));
    }
    return h;
}

}  // namespace

MultiPoly schur_in_t(const Partition& lambda, int m) {
    if (m < lambda.size()) throw std::invalid_argument("schur_in_t needs m >= |lambda|");
    int l = lambda.length();
    if (l == 0) return MultiPoly::constant(m, Rational(1));
    auto h = complete_homogeneous(lambda.part(0) + l, m);
    std::vector<std::vector<MultiPoly>> jt(static_cast<size_t>(l),
                                           std::vector<MultiPoly>(static_cast<size_t>(l), MultiPoly(m)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int idx = lambda.part(i) - i + j;
            jt[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (idx < 0) ? MultiPoly(m) : h[static_cast<size_t>(idx)];
        }
    return det_multipoly(jt, m);
}

namespace {

// Count Littlewood-Richardson fillings of lambda/mu with content nu:
// rows weakly increase, columns strictly increase, reverse reading word
// is a lattice word.
long count_lr_fillings(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int rows = lambda.length();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), 0);

    std::vector<int> remaining(static_cast<size_t>(nu.length()));
    for (int i = 0; i < nu.length(); ++i) remaining[static_cast<size_t>(i)] = nu.part(i);
    std::vector<int> seen(static_cast<size_t>(nu.length()) + 1, 0);  // counts along reading word

    // boxes of the skew shape in reading order: top row to bottom, right to left
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < rows; ++r)
        for (int c = lambda.part(r) - 1; c >= mu.part(r); --c) boxes.emplace_back(r, c);

    long count = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == boxes.size()) {
            ++count;
            return;
        }
        auto [r, c] = boxes[idx];
        for (int letter = 1; letter <= nu.length(); ++letter) {
            if (remaining[static_cast<size_t>(letter - 1)] == 0) continue;
            // lattice: when placing `letter`, strictly fewer of it than letter-1 so far
            if (letter > 1 && seen[static_cast<size_t>(letter - 1)] + 1 > seen[static_cast<size_t>(letter - 2)])
                continue;
            // row weakly increasing: box to the right (previous in reading order on this row)
            if (c + 1 < lambda.part(r) && fill[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] < letter)
                continue;
            // column strictly increasing: box above
            if (r > 0 && c < lambda.part(r - 1) && c >= mu.part(r - 1)) {
                if (fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >= letter) continue;
            }
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = letter;
            remaining[static_cast<size_t>(letter - 1)] -= 1;
            seen[static_cast<size_t>(letter - 1)] += 1;
            self(self, idx + 1);
            seen[static_cast<size_t>(letter - 1)] -= 1;
            remaining[static_cast<size_t>(letter - 1)] += 1;
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

std::vector<std::pair<Partition, long>> lr_expand(const Partition& mu, const Partition& nu,
                                                  int box_rows, int box_cols) {
    std::vector<std::pair<Partition, long>> out;
    int total = mu.size() + nu.size();
    for (const auto& lambda : partitions_of(total)) {
        if (!lambda.contains(mu)) continue;
        if (lambda.length() > mu.length() + nu.length()) continue;
        if (box_rows >= 0 && !lambda.fits_box(box_rows, box_cols)) continue;
        long c = count_lr_fillings(lambda, mu, nu);
        if (c > 0) out.emplace_back(lambda, c);
    }
    return out;
}

long lr_multiplicity(const Partition& target, const std::vector<Partition>& factors) {
    int total = 0;
    for (const auto& f : factors) total += f.size();
    if (total != target.size()) return 0;
    std::map<Partition, long> acc{{Partition{}, 1}};
    for (const auto& f : factors) {
        if (f.empty()) continue;
        std::map<Partition, long> next;
        for (const auto& [mu, coeff] : acc)
            for (const auto& [lam, c] : lr_expand(mu, f)) next[lam] += coeff * c;
        acc = std::move(next);
    }
    auto it = acc.find(target);
    return it == acc.end() ? 0 : it->second;
}

namespace {

long mn_character(const Partition& lambda, std::vector<int> cycles,
                  std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
    if (cycles.empty()) return lambda.empty() ? 1 : 0;
    if (lambda.empty()) return 0;
    auto key = std::make_pair(lambda.parts, cycles);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int k = cycles.back();  // peel the largest cycle last-to-first; order is immaterial
    cycles.pop_back();
    long total = 0;
    // remove every border strip of size k: strips correspond to pairs of
    // beta-numbers b = lambda_i + (l - 1 - i) with b - k also free
    int l = lambda.length();
    std::vector<int> beta(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lambda.part(i) + (l - 1 - i);
    for (int i = 0; i < l; ++i) {
        int nb = beta[static_cast<size_t>(i)] - k;
        if (nb < 0) continue;
        bool occupied = false;
        int below = 0;  // occupied beta values passed over, gives the strip height
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[static_cast<size_t>(j)] == nb) occupied = true;
            if (beta[static_cast<size_t>(j)] > nb && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)]) ++below;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nparts(static_cast<size_t>(l));
        for (int j = 0; j < l; ++j) nparts[static_cast<size_t>(j)] = nbeta[static_cast<size_t>(j)] - (l - 1 - j);
        Partition nl(std::move(nparts));
        long sign = (below % 2 == 0) ? 1 : -1;
        total += sign * mn_character(nl, cycles, memo);
    }
    memo[key] = total;
    return total;
}

}  // namespace

long character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("character needs |lambda| = |cycle_type|");
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
    std::vector<int> cycles = cycle_type.parts;
    std::sort(cycles.begin(), cycles.end());
    return mn_character(lambda, cycles, memo);
}

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

long conjugacy_class_size(const Partition& cycle_type) {
    // z = prod k^{m_k} m_k!
    long z = 1;
    std::map<int, int> mult;
    for (int p : cycle_type.parts) mult[p] += 1;
    for (const auto& [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(m);
    }
    return factorial(cycle_type.size()) / z;
}

long hom_dim_characters(const Partition& lambda, const std::vector<int>& q_blocks,
                        const std::vector<Partition>& mu, bool sgn_twist) {
    int n = 0;
    for (int b : q_blocks) n += b;
    if (n != lambda.size() || q_blocks.size() != mu.size())
        throw std::invalid_argument("hom_dim_characters size mismatch");
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i].size() != q_blocks[i]) throw std::invalid_argument("mu^(i) must be a partition of n_i");

    // Frobenius reciprocity: <Ind chi, chi^lambda>_{S_n} = <chi, Res chi^lambda>_{S_q},
    // summed over classes of S_q = tuples of cycle types.
    long order_q = 1;
    for (int b : q_blocks) order_q *= factorial(b);

    std::vector<std::vector<Partition>> cls;
    for (int b : q_blocks) cls.push_back(partitions_of(b));

    long acc = 0;
    std::vector<size_t> idx(q_blocks.size(), 0);
    while (true) {
        long weight = 1;
        long inner = 1;
        std::vector<int> joined;
        for (size_t i = 0; i < q_blocks.size(); ++i) {
            const Partition& rho = cls[i][idx[i]];
            weight *= conjugacy_class_size(rho);
            inner *= character(mu[i], rho);
            if (sgn_twist && (rho.size() - rho.length()) % 2 != 0) inner = -inner;
            joined.insert(joined.end(), rho.parts.begin(), rho.parts.end());
        }
        std::sort(joined.rbegin(), joined.rend());
        acc += weight * inner * character(lambda, Partition(std::move(joined)));

        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == cls[pos].size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    if (acc % order_q != 0) throw std::logic_error("non-integral character inner product");
    return acc / order_q;
}

}  // namespace cmgr
