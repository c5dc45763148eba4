#include "cmgr/partition.hpp"

#include <algorithm>

namespace cmgr {

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int j = 0; j < part(0); ++j) {
        int cnt = 0;
        for (int p : parts)
            if (p > j) ++cnt;
        t.push_back(cnt);
    }
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& o) const {
    if (o.length() > length()) return false;
    for (int i = 0; i < o.length(); ++i)
        if (o.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

FrobeniusForm frobenius_form(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("frobenius_form of empty partition");
    Partition t = lambda.transpose();
    FrobeniusForm f;
    for (int d = 0; lambda.part(d) > d; ++d) {
        int arm = lambda.part(d) - d;  // boxes in the hook's row, diagonal box included
        int leg = t.part(d) - d;       // boxes in the hook's column, diagonal box included
        f.emplace_back(arm + leg - 1, leg);
    }
    return f;
}

Partition partition_from_frobenius(const FrobeniusForm& f) {
    for (size_t i = 0; i < f.size(); ++i) {
        auto [n, r] = f[i];
        if (r < 1 || r > n) throw std::invalid_argument("frobenius pair out of range");
        if (i > 0) {
            auto [np, rp] = f[i - 1];
            if (!(rp > r && np - rp > n - r))
                throw std::invalid_argument("frobenius pairs must strictly interlace");
        }
    }
    std::vector<int> parts;
    for (size_t i = 0; i < f.size(); ++i) {
        auto [n, r] = f[i];
        int d = static_cast<int>(i);
        int arm = n - r + 1;  // hook row length
        // hook i occupies row d (length d + arm) and rows d+1..d+r-1 (length d + 1)
        if (static_cast<int>(parts.size()) <= d) parts.resize(static_cast<size_t>(d) + 1, 0);
        parts[static_cast<size_t>(d)] = d + arm;
        for (int j = 1; j < r; ++j) {
            if (static_cast<int>(parts.size()) <= d + j) parts.resize(static_cast<size_t>(d + j) + 1, 0);
            parts[static_cast<size_t>(d + j)] = std::max(parts[static_cast<size_t>(d + j)], d + 1);
        }
    }
    return Partition(std::move(parts));
}

ContentsResidue contents_residue(const Partition& lambda) {
    ContentsResidue cr;
    for (int row = 0; row < lambda.length(); ++row)
        for (int col = 0; col < lambda.part(row); ++col) {
            cr.contents.push_back(col - row);
            cr.residue[col - row] += 1;
        }
    std::sort(cr.contents.begin(), cr.contents.end());
    return cr;
}

std::vector<int> pivot_set(const Partition& lambda, int window) {
    if (lambda.part(0) > window) throw std::invalid_argument("window too small for partition");
    std::vector<int> s;
    for (int i = 0;; ++i) {
        int si = i - lambda.part(i);
        if (si >= window) break;
        s.push_back(si);
    }
    return s;
}

Partition box_complement(const Partition& lambda, int n) {
    if (!lambda.fits_box(n, n)) throw std::invalid_argument("partition outside the n x n box");
    std::vector<int> parts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parts[static_cast<size_t>(n - 1 - i)] = n - lambda.part(i);
    return Partition(std::move(parts));
}

long dim_irrep(const Partition& lambda) {
    int n = lambda.size();
    if (n == 0) return 1;
    Partition t = lambda.transpose();
    long num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    long hooks = 1;
    for (int row = 0; row < lambda.length(); ++row)
        for (int col = 0; col < lambda.part(row); ++col)
            hooks *= (lambda.part(row) - col) + (t.part(col) - row) - 1;
    return num / hooks;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

void gen_multisets(int n, const std::vector<Partition>& pool, size_t start,
                   std::vector<Partition>& cur, std::vector<std::vector<Partition>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
        int s = pool[i].size();
        if (s > n) continue;
        cur.push_back(pool[i]);
        gen_multisets(n - s, pool, i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<std::vector<Partition>> partition_multisets_of(int n) {
    std::vector<Partition> pool;
    for (int k = n; k >= 1; --k)
        for (const auto& p : partitions_of(k)) pool.push_back(p);
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    gen_multisets(n, pool, 0, cur, out);
    return out;
}

}  // namespace cmgr
