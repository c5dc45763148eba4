#include "cmgr/suites.hpp"

#include "cmgr/rng.hpp"
#include "cmgr/symfun.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace cmgr {

Json SuiteReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["n_max"] = n_max;
    j["seed"] = seed;
    j["samples"] = samples;
    j["run"] = run;
    j["passed"] = passed;
    j["failed"] = failed;
    j["witnesses"] = witnesses;
    return j;
}

std::string SuiteReport::table() const {
    std::ostringstream os;
    os << "suite " << suite << " (n_max=" << n_max << ", seed=" << seed << ", samples=" << samples
       << "): " << passed << "/" << run << " passed";
    if (failed > 0) {
        os << ", " << failed << " FAILED\n";
        for (const auto& w : witnesses) os << "  witness: " << w.dump() << "\n";
    } else {
        os << "\n";
    }
    return os.str();
}

Json IntersectDims::to_json() const {
    Json j;
    j["character_dim"] = character_dim;
    j["lr_dim"] = lr_dim;
    j["schubert_dim"] = schubert_dim;
    j["agree"] = agree;
    return j;
}

IntersectDims intersect_dims(const Partition& lambda, const std::vector<int>& q_blocks,
                             const std::vector<Partition>& mu) {
    int n = 0;
    for (int b : q_blocks) n += b;
    if (n != lambda.size()) throw std::invalid_argument("block sizes must sum to |lambda|");
    IntersectDims out;
    out.character_dim = hom_dim_characters(lambda, q_blocks, mu, true);
    Partition lt = lambda.transpose();
    out.lr_dim = lr_multiplicity(lt, mu);
    // pairing <sigma_{lambda^t}, prod sigma_mu>: multiply the classes in the
    // n x n box and read the coefficient of the full box against the
    // complement class of lambda^t
    std::map<Partition, long> acc{{Partition{}, 1}};
    auto mult_by = [&](const Partition& f) {
        std::map<Partition, long> next;
        for (const auto& [p, c] : acc)
            for (const auto& [q, k] : lr_expand(p, f, n, n)) next[q] += c * k;
        acc = std::move(next);
    };
    for (const auto& f : mu) mult_by(f);
    mult_by(box_complement(lt, n));
    std::vector<int> full(static_cast<size_t>(n), n);
    auto it = acc.find(Partition(full));
    out.schubert_dim = it == acc.end() ? 0 : it->second;
    out.agree = out.character_dim == out.lr_dim && out.lr_dim == out.schubert_dim;
    return out;
}

namespace suites {

namespace {

std::string part_str(const Partition& p) { return p.to_string(); }

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
    return seed * 1000003ULL + index * 7919ULL + 1ULL;
}

bool rank_one_factorization_exact(const CMPoint& p) {
    QMatrix comm = p.x * p.y - p.y * p.x + QMatrix::identity(p.n);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (comm.at(i, j) != p.v[static_cast<size_t>(i)] * p.w[static_cast<size_t>(j)]) return false;
    return true;
}

// Test Y matrices with split rational spectra: Jordan blocks at chosen
// points, cycling over shapes. Every shape is regular (one block per
// eigenvalue) so the sampler's w-system is square.
QMatrix sample_y_matrix(int n, int variant, Rng& rng) {
    QMatrix y(n, n);
    std::vector<int> block_sizes;
    switch (variant % 3) {
        case 0:  // distinct diagonal
            block_sizes.assign(static_cast<size_t>(n), 1);
            break;
        case 1:  // single Jordan block
            block_sizes.assign(1, n);
            break;
        default: {  // two blocks
            int k = 1 + (variant / 3) % std::max(1, n - 1);
            if (k >= n) k = n - 1;
            block_sizes = {k, n - k};
            break;
        }
    }
    if (n == 1) block_sizes.assign(1, 1);
    std::vector<Rational> evs;
    while (evs.size() < block_sizes.size()) {
        Rational b(rng.pick(-4, 4), rng.pick(1, 2));
        b.canonicalize();
        if (std::find(evs.begin(), evs.end(), b) == evs.end()) evs.push_back(b);
    }
    int off = 0;
    for (size_t i = 0; i < block_sizes.size(); ++i) {
        int sz = block_sizes[i];
        for (int k = 0; k < sz; ++k) {
            y.at(off + k, off + k) = evs[i];
            if (k + 1 < sz) y.at(off + k, off + k + 1) = 1;
        }
        off += sz;
    }
    return y;
}

QMatrix two_cluster_y(int n, int variant, Rng& rng) {
    int k = 1 + variant % (n - 1);
    Rational b1(rng.pick(-4, 4), rng.pick(1, 2));
    b1.canonicalize();
    Rational b2 = b1;
    while (b2 == b1) {
        b2 = Rational(rng.pick(-4, 4), rng.pick(1, 2));
        b2.canonicalize();
    }
    QMatrix y(n, n);
    for (int i = 0; i < k; ++i) {
        y.at(i, i) = b1;
        if (i + 1 < k) y.at(i, i + 1) = 1;
    }
    for (int i = k; i < n; ++i) {
        y.at(i, i) = b2;
        if (i + 1 < n) y.at(i, i + 1) = 1;
    }
    return y;
}

std::optional<CMPoint> sample_point(int n, std::uint64_t seed, bool two_cluster) {
    for (int tries = 0; tries < 24; ++tries) {
        Rng rng(case_seed(seed, static_cast<std::uint64_t>(tries)));
        QMatrix y = two_cluster && n >= 2 ? two_cluster_y(n, tries, rng)
                                          : sample_y_matrix(n, tries, rng);
        auto p = sample_cm(y, case_seed(seed, 1000 + static_cast<std::uint64_t>(tries)));
        if (p) return p;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Case> fixed_point_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n)) {
            cases.push_back({"fixed-point n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 if (!rank_one_factorization_exact(p)) {
                                     w["point"] = to_json(p);
                                     w["reason"] = "rank-one factorization mismatch";
                                     return false;
                                 }
                                 if (!is_fuchsian(p)) {
                                     w["point"] = to_json(p);
                                     w["reason"] = "fixed point must be supported at zero";
                                     return false;
                                 }
                                 Spectra s = spectra(p);
                                 if (!s.pi || s.pi->points.size() != 1 || s.pi->points[0].first != 0 ||
                                     s.pi->points[0].second != lam.size()) {
                                     w["point"] = to_json(p);
                                     w["reason"] = "support is not n * 0";
                                     return false;
                                 }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> residue_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n)) {
            cases.push_back({"residue n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 SpectralData s = rho(p);
                                 if (!s.roots.split()) {
                                     w["lambda"] = to_json(lam);
                                     w["charpoly"] = to_json(s.charpoly_z);
                                     w["reason"] = "spectrum of YX does not split";
                                     return false;
                                 }
                                 std::vector<int> eigen;
                                 for (const auto& [r, m] : s.roots.roots) {
                                     if (rat_den(r) != 1) return false;
                                     for (int k = 0; k < m; ++k) eigen.push_back(static_cast<int>(rat_num(r).get_si()));
                                 }
                                 std::sort(eigen.begin(), eigen.end());
                                 auto want = contents_residue(lam.transpose()).contents;
                                 if (eigen != want) {
                                     w["lambda"] = to_json(lam);
                                     w["eigenvalues"] = eigen;
                                     w["contents_transpose"] = want;
                                     return false;
                                 }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> tau_schur_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n)) {
            cases.push_back({"tau-schur n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam, n](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 MultiPoly tau = tau_cm(p, n);
                                 MultiPoly s = schur_in_t(lam, n);
                                 if (!proportional(tau, s)) {
                                     w["lambda"] = to_json(lam);
                                     w["tau"] = to_json(tau);
                                     w["schur"] = to_json(s);
                                     return false;
                                 }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> eta_cell_cases(int n_max, std::uint64_t seed, int samples) {
    std::vector<Case> cases;
    std::uint64_t idx = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n))
            for (int s = 0; s < samples; ++s) {
                std::uint64_t cseed = case_seed(seed, idx++);
                cases.push_back(
                    {"eta-cell n=" + std::to_string(n) + " lambda=" + part_str(lam) + " sample=" + std::to_string(s),
                     [lam, n, cseed, s](Json& w) {
                         Rational b(0);
                         if (s % 3 == 1) b = Rational(1);
                         if (s % 3 == 2) b = Rational(-1, 2);
                         WindowSubspace win = sample_window_cell(lam, b, cseed);
                         if (!(cell_of_window(win) == lam)) {
                             w["window"] = to_json(win);
                             w["reason"] = "cell round trip failed";
                             return false;
                         }
                         // containment-maximal nonzero coordinate must be the cell
                         PlueckerVector pv = pluecker(win);
                         if (pv.coords.find(lam) == pv.coords.end()) {
                             w["window"] = to_json(win);
                             w["reason"] = "pluecker coordinate of the cell vanishes";
                             return false;
                         }
                         for (const auto& [mu, coord] : pv.coords)
                             if (!lam.contains(mu)) {
                                 w["window"] = to_json(win);
                                 w["reason"] = "pluecker support not contained in the cell partition";
                                 return false;
                             }
                         QuasiExpSpace c = eta(win);
                         WronskianResult wr = wronskian(c);
                         if (!wr.canonical || wr.degree != n || c.dim() != n) {
                             w["window"] = to_json(win);
                             w["space"] = to_json(c);
                             w["reason"] = "eta image is not canonical of degree n";
                             return false;
                         }
                         Partition lt = lam.transpose();
                         FlagSpec inf{std::nullopt, 2 * n};
                         if (!schubert_member(c.components[0].polys, inf, box_complement(lt, n))) {
                             w["window"] = to_json(win);
                             w["space"] = to_json(c);
                             w["reason"] = "eta image not in the transposed cell";
                             return false;
                         }
                         return true;
                     }});
            }
    return cases;
}

std::vector<Case> wronskian_fixed_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n))
            cases.push_back({"wronskian-fixed n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 QuasiExpSpace c = solution_space(p);
                                 Poly wr = wronskian(c).wr;
                                 Poly want = charpoly(p.x).monic();  // det(t - X)
                                 if (!(wr == want)) {
                                     w["lambda"] = to_json(lam);
                                     w["wronskian"] = to_json(wr);
                                     w["charpoly_x"] = to_json(want);
                                     return false;
                                 }
                                 return true;
                             }});
    return cases;
}

std::vector<Case> wronskian_sample_cases(int n_max, std::uint64_t seed, int samples) {
    std::vector<Case> cases;
    std::uint64_t idx = 0;
    for (int n = 1; n <= n_max; ++n)
        for (int s = 0; s < samples; ++s) {
            std::uint64_t cseed = case_seed(seed, 50000 + idx++);
            cases.push_back({"wronskian-sample n=" + std::to_string(n) + " sample=" + std::to_string(s),
                             [n, cseed](Json& w) {
                                 auto p = sample_point(n, cseed, false);
                                 if (!p) {
                                     w["reason"] = "sampler exhausted draws";
                                     return false;
                                 }
                                 QuasiExpSpace c = solution_space(*p);
                                 Poly wr = wronskian(c).wr;
                                 Poly want = charpoly(p->x).monic();  // det(t - X)
                                 if (!(wr == want)) {
                                     w["point"] = to_json(*p);
                                     w["wronskian"] = to_json(wr);
                                     w["charpoly_x"] = to_json(want);
                                     return false;
                                 }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> factorization_cases(int n_max, std::uint64_t seed, int samples) {
    std::vector<Case> cases;
    std::uint64_t idx = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int s = 0; s < samples; ++s) {
            std::uint64_t cseed = case_seed(seed, 90000 + idx++);
            cases.push_back({"factorization n=" + std::to_string(n) + " sample=" + std::to_string(s),
                             [n, cseed](Json& w) {
                                 auto p = sample_point(n, cseed, true);
                                 if (!p) {
                                     w["reason"] = "sampler exhausted draws";
                                     return false;
                                 }
                                 auto blocks = factorize(*p);
                                 int total = 0;
                                 SupportDivisor recomposed;
                                 for (const auto& [b, blk] : blocks) {
                                     total += blk.n;
                                     recomposed.points.emplace_back(b, blk.n);
                                     if (!rank_one_factorization_exact(blk)) {
                                         w["point"] = to_json(*p);
                                         w["block"] = to_json(blk);
                                         w["reason"] = "block fails the rank-one condition";
                                         return false;
                                     }
                                 }
                                 if (total != n) {
                                     w["point"] = to_json(*p);
                                     w["reason"] = "block sizes do not sum to n";
                                     return false;
                                 }
                                 Spectra sp = spectra(*p);
                                 if (!sp.pi || !(recomposed == *sp.pi)) {
                                     w["point"] = to_json(*p);
                                     w["reason"] = "block supports do not recompose pi";
                                     return false;
                                 }
                                 MultiPartition whole = classify_cell(*p);
                                 MultiPartition pieced;
                                 for (const auto& [b, blk] : blocks) {
                                     MultiPartition one = classify_cell(blk);
                                     if (one.blocks.size() != 1 || !(one.blocks[0].first == b)) {
                                         w["point"] = to_json(*p);
                                         w["reason"] = "block classification has unexpected support";
                                         return false;
                                     }
                                     pieced.blocks.emplace_back(b, one.blocks[0].second);
                                 }
                                 if (!(whole == pieced)) {
                                     w["point"] = to_json(*p);
                                     w["whole"] = to_json(whole);
                                     w["pieced"] = to_json(pieced);
                                     w["reason"] = "classification does not factor through blocks";
                                     return false;
                                 }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> involution_cases(int n_max, std::uint64_t seed) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n) {
        std::uint64_t sseed = case_seed(seed, 40000 + static_cast<std::uint64_t>(n));
        cases.push_back({"involution-squares-sampled n=" + std::to_string(n),
                         [n, sseed](Json& w) {
                             auto p = sample_point(n, sseed, false);
                             if (!p) {
                                 w["reason"] = "sampler exhausted draws";
                                 return false;
                             }
                             for (auto kind : {TransformKind::Bispectral, TransformKind::Star,
                                               TransformKind::Negate}) {
                                 CMPoint q = transform(transform(*p, kind), kind);
                                 if (!(q.x == p->x && q.y == p->y)) {
                                     w["point"] = to_json(*p);
                                     w["reason"] = "transform squared is not the identity";
                                     return false;
                                 }
                             }
                             CMPoint lhs = transform(*p, TransformKind::Star);
                             CMPoint rhs = transform(
                                 transform(transform(*p, TransformKind::Negate), TransformKind::Bispectral),
                                 TransformKind::Fourier);
                             if (!(lhs.x == rhs.x && lhs.y == rhs.y)) {
                                 w["point"] = to_json(*p);
                                 w["reason"] = "star is not fourier . bispectral . negate";
                                 return false;
                             }
                             return true;
                         }});
    }
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n)) {
            cases.push_back({"star-cell n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 CMPoint st = transform(p, TransformKind::Star);
                                 MultiPartition cls = classify_cell(st);
                                 Partition want = lam.transpose();
                                 if (cls.blocks.size() != 1 || !(cls.blocks[0].first == 0) ||
                                     !(cls.blocks[0].second == want)) {
                                     w["lambda"] = to_json(lam);
                                     w["classified"] = to_json(cls);
                                     return false;
                                 }
                                 return true;
                             }});
            cases.push_back({"involution-squares n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 for (auto kind : {TransformKind::Bispectral, TransformKind::Star, TransformKind::Negate}) {
                                     CMPoint q = transform(transform(p, kind), kind);
                                     if (!(q.x == p.x && q.y == p.y)) {
                                         w["lambda"] = to_json(lam);
                                         w["reason"] = "transform squared is not the identity";
                                         return false;
                                     }
                                 }
                                 CMPoint lhs = transform(p, TransformKind::Star);
                                 CMPoint rhs = transform(transform(transform(p, TransformKind::Negate), TransformKind::Bispectral), TransformKind::Fourier);
                                 if (!(lhs.x == rhs.x && lhs.y == rhs.y)) {
                                     w["lambda"] = to_json(lam);
                                     w["reason"] = "star is not fourier . bispectral . negate";
                                     return false;
                                 }
                                 return true;
                             }});
            std::uint64_t tseed = case_seed(seed, 30000 + static_cast<std::uint64_t>(cases.size()));
            cases.push_back({"translate-scale n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam, n, tseed](Json& w) {
                                 Rng rng(tseed);
                                 CMPoint p = fixed_point(lam);
                                 Rational b = rng.small_rational();
                                 CMPoint tr = transform(p, TransformKind::Translate, b);
                                 Spectra sp = spectra(tr);
                                 if (!sp.pi || sp.pi->points.size() != 1 || !(sp.pi->points[0].first == -b)) {
                                     w["lambda"] = to_json(lam);
                                     w["reason"] = "translate does not shift the support";
                                     return false;
                                 }
                                 Rational alpha(2, 3);
                                 CMPoint sc = transform(p, TransformKind::Scale, alpha);
                                 MultiPoly lhs = tau_cm(sc, n);
                                 Rational alpha_n(1);
                                 for (int k = 0; k < n; ++k) alpha_n *= alpha;
                                 MultiPoly rhs = tau_cm(p, n).rescale_vars(alpha) * (Rational(1) / alpha_n);
                                 if (!(lhs == rhs)) {
                                     w["lambda"] = to_json(lam);
                                     w["reason"] = "tau is not scale-equivariant";
                                     return false;
                                 }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> dimension_identity_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n) {
        auto multisets = partition_multisets_of(n);
        for (const auto& mu : multisets) {
            std::string mu_str;
            for (const auto& m : mu) mu_str += part_str(m);
            cases.push_back({"lr-sum n=" + std::to_string(n) + " mu=" + mu_str,
                             [mu, n](Json& w) {
                                 std::vector<int> blocks;
                                 long dims = 1;
                                 for (const auto& m : mu) {
                                     blocks.push_back(m.size());
                                     dims *= dim_irrep(m);
                                 }
                                 long multinomial = factorial(n);
                                 for (int b : blocks) multinomial /= factorial(b);
                                 // dim of the induced module: each constituent
                                 // weighted by its own dimension
                                 long total = 0;
                                 for (const auto& lam : partitions_of(n))
                                     total += dim_irrep(lam) * lr_multiplicity(lam, mu);
                                 if (total != multinomial * dims) {
                                     w["n"] = n;
                                     Json muj = Json::array();
                                     for (const auto& m : mu) muj.push_back(to_json(m));
                                     w["mu"] = muj;
                                     w["lr_total"] = total;
                                     w["expected"] = multinomial * dims;
                                     return false;
                                 }
                                 return true;
                             }});
            for (const auto& lam : partitions_of(n)) {
                cases.push_back({"hom-vs-lr n=" + std::to_string(n) + " lambda=" + part_str(lam) + " mu=" + mu_str,
                                 [lam, mu](Json& w) {
                                     std::vector<int> blocks;
                                     for (const auto& m : mu) blocks.push_back(m.size());
                                     IntersectDims d = intersect_dims(lam, blocks, mu);
                                     if (!d.agree) {
                                         w["lambda"] = to_json(lam);
                                         Json muj = Json::array();
                                         for (const auto& m : mu) muj.push_back(to_json(m));
                                         w["mu"] = muj;
                                         w["dims"] = d.to_json();
                                         return false;
                                     }
                                     return true;
                                 }});
            }
        }
    }
    return cases;
}

std::vector<Case> baker_operator_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n)) {
            cases.push_back({"baker-euler n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam, n](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 DiffOperator d = diff_op(p);
                                 Partition lt = lam.transpose();
                                 DiffOperator want;
                                 want.add(0, 0, Rational(1));
                                 for (int i = 0; i < n; ++i) {
                                     DiffOperator factor;
                                     factor.add(1, 1, Rational(1));
                                     factor.add(0, 0, Rational(-(n + lt.part(i) - (i + 1))));
                                     want = op_mul(want, factor);
                                 }
                                 if (!op_proportional(d, want)) {
                                     w["lambda"] = to_json(lam);
                                     w["operator"] = to_json(d);
                                     w["euler_product"] = to_json(want);
                                     return false;
                                 }
                                 QuasiExpSpace c = solution_space(p);
                                 for (const auto& comp : c.components)
                                     for (const auto& g : comp.polys)
                                         if (!apply_op(d, comp.b, g).is_zero()) {
                                             w["lambda"] = to_json(lam);
                                             w["reason"] = "operator does not annihilate its solution space";
                                             return false;
                                         }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> tau_bridge_cases(int n_max, std::uint64_t seed, int samples) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n))
            cases.push_back({"tau-bridge-fixed n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 QuasiExpSpace c = solution_space(p);
                                 for (int m = 1; m <= 3; ++m) {
                                     if (!proportional(tau_cm(p, m), tau_qe(c, m))) {
                                         w["lambda"] = to_json(lam);
                                         w["m"] = m;
                                         return false;
                                     }
                                 }
                                 return true;
                             }});
    std::uint64_t idx = 0;
    for (int n = 1; n <= n_max; ++n)
        for (int s = 0; s < samples; ++s) {
            std::uint64_t cseed = case_seed(seed, 70000 + idx++);
            // cycle nilpotent, split non-nilpotent, and two-cluster spectra
            int flavor = s % 3;
            cases.push_back({"tau-bridge-sample n=" + std::to_string(n) + " sample=" + std::to_string(s),
                             [n, cseed, flavor](Json& w) {
                                 std::optional<CMPoint> p;
                                 if (flavor == 0) {
                                     QMatrix jn(n, n);  // nilpotent regular Y
                                     for (int i = 0; i + 1 < n; ++i) jn.at(i, i + 1) = 1;
                                     p = sample_cm(jn, cseed);
                                 } else {
                                     p = sample_point(n, cseed, flavor == 2 && n >= 2);
                                 }
                                 if (!p) {
                                     w["reason"] = "sampler exhausted draws";
                                     return false;
                                 }
                                 QuasiExpSpace c = solution_space(*p);
                                 for (int m = 1; m <= 3; ++m) {
                                     if (!proportional(tau_cm(*p, m), tau_qe(c, m))) {
                                         w["point"] = to_json(*p);
                                         w["m"] = m;
                                         return false;
                                     }
                                 }
                                 return true;
                             }});
        }
    return cases;
}

std::vector<Case> cperp_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lam : partitions_of(n))
            cases.push_back({"cperp n=" + std::to_string(n) + " lambda=" + part_str(lam),
                             [lam, n](Json& w) {
                                 CMPoint p = fixed_point(lam);
                                 int depth = 2 * n;
                                 QMatrix span = cperp_span(p, depth);
                                 QuasiExpSpace c = solution_space(p);
                                 // orthogonality: every slice row against every solution
                                 for (int r = 0; r < span.rows; ++r) {
                                     std::vector<Rational> coeffs;
                                     for (int j = 0; j < depth; ++j) coeffs.push_back(span.at(r, j));
                                     Poly f(std::move(coeffs));
                                     for (const auto& comp : c.components)
                                         for (const auto& g : comp.polys)
                                             if (pair_qe(comp.b, g, f) != 0) {
                                                 w["lambda"] = to_json(lam);
                                                 w["reason"] = "slice span does not annihilate the solution space";
                                                 return false;
                                             }
                                 }
                                 // equality with the truncated annihilator: dimension check
                                 if (span.rows != depth - n) {
                                     w["lambda"] = to_json(lam);
                                     w["rows"] = span.rows;
                                     w["expected"] = depth - n;
                                     w["reason"] = "span dimension differs from the truncated annihilator";
                                     return false;
                                 }
                                 return true;
                             }});
    return cases;
}

SuiteReport execute(std::string suite, int n_max, std::uint64_t seed, int samples,
                    std::vector<Case> cases) {
    SuiteReport rep;
    rep.suite = std::move(suite);
    rep.n_max = n_max;
    rep.seed = seed;
    rep.samples = samples;
    rep.run = static_cast<long>(cases.size());

    struct Slot {
        bool passed = false;
        Json witness;
    };
    std::vector<Slot> slots(cases.size());
    std::atomic<size_t> next{0};
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 8);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                Json w;
                bool ok = false;
                try {
                    ok = cases[i].check(w);
                } catch (const std::exception& e) {
                    w["exception"] = e.what();
                    ok = false;
                }
                if (!ok) {
                    Json entry;
                    entry["case"] = cases[i].key;
                    entry["witness"] = w;
                    slots[i].witness = std::move(entry);
                }
                slots[i].passed = ok;
            }
        });
    for (auto& t : pool) t.join();

    std::vector<size_t> order(cases.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return cases[a].key < cases[b].key; });
    for (size_t i : order) {
        if (slots[i].passed) {
            ++rep.passed;
        } else {
            ++rep.failed;
            rep.witnesses.push_back(slots[i].witness);
        }
    }
    return rep;
}

}  // namespace suites

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "fixed-points",    "residues",     "tau-schur",           "eta-cells",
        "wronskian-fiber", "factorization", "involutions",         "dimension-identities",
        "baker-operators"};
    return names;
}

SuiteReport run_suite(const std::string& name, int n_max, std::uint64_t seed, int samples) {
    using namespace suites;
    if (name == "all") {
        SuiteReport total;
        total.suite = "all";
        total.n_max = n_max;
        total.seed = seed;
        total.samples = samples;
        for (const auto& sub : suite_names()) {
            SuiteReport r = run_suite(sub, n_max, seed, samples);
            total.run += r.run;
            total.passed += r.passed;
            total.failed += r.failed;
            for (const auto& w : r.witnesses) total.witnesses.push_back(w);
        }
        return total;
    }
    if (name == "fixed-points") return execute(name, n_max, seed, samples, fixed_point_cases(n_max));
    if (name == "residues") return execute(name, n_max, seed, samples, residue_cases(n_max));
    if (name == "tau-schur") return execute(name, n_max, seed, samples, tau_schur_cases(n_max));
    if (name == "eta-cells")
        return execute(name, n_max, seed, samples, eta_cell_cases(n_max, seed, samples));
    if (name == "wronskian-fiber") {
        auto cases = wronskian_fixed_cases(n_max);
        auto sampled = wronskian_sample_cases(n_max, seed, samples);
        cases.insert(cases.end(), sampled.begin(), sampled.end());
        return execute(name, n_max, seed, samples, std::move(cases));
    }
    if (name == "factorization")
        return execute(name, n_max, seed, samples, factorization_cases(n_max, seed, samples));
    if (name == "involutions") return execute(name, n_max, seed, samples, involution_cases(n_max, seed));
    if (name == "dimension-identities")
        return execute(name, n_max, seed, samples, dimension_identity_cases(n_max));
    if (name == "baker-operators") {
        auto cases = baker_operator_cases(n_max);
        auto bridge = tau_bridge_cases(n_max, seed, std::max(1, samples / 4));
        auto perp = cperp_cases(std::min(n_max, 5));
        cases.insert(cases.end(), bridge.begin(), bridge.end());
        cases.insert(cases.end(), perp.begin(), perp.end());
        return execute(name, n_max, seed, samples, std::move(cases));
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace cmgr
