#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liekring/branching.hpp"
#include "liekring/check/properties.hpp"
#include "liekring/decompose.hpp"
#include "liekring/freudenthal.hpp"
#include "liekring/kring.hpp"
#include "liekring/koszul.hpp"
#include "liekring/report.hpp"
#include "liekring/root_system.hpp"
#include "liekring/spin10.hpp"
#include "liekring/tangent.hpp"
#include "liekring/verdict.hpp"

namespace liekring {

struct RunOptions {
  std::uint64_t seed = 20240601;
  bool allow_slow = false;
};

/// Claims of one or more suites, plus the full text of each computed object by claim id.
struct SuiteOutput {
  std::vector<ClaimRecord> claims;
  std::map<std::string, std::string> dumps;

  void append(SuiteOutput other) {
    for (auto& c : other.claims) claims.push_back(std::move(c));
    for (auto& [k, v] : other.dumps) dumps[k] = std::move(v);
  }

  Report report() const {
    Report r;
    r.claims = claims;
    r.normalize();
    return r;
  }
};

namespace detail {

/// Runs a batch of verdict-producing checks, timing them together and turning
/// exceptions into failed records for every id of the batch.
class SuiteBuilder {
 public:
  explicit SuiteBuilder(SuiteOutput& out) : out_(out) {}

  using Located = std::vector<std::pair<std::string, std::string>>;

  void batch(const Located& ids, const std::function<std::vector<Verdict>()>& run) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Verdict> verdicts;
    std::string error;
    try {
      verdicts = run();
      if (verdicts.size() != ids.size()) throw InternalConsistencyError("suite produced the wrong number of verdicts");
    } catch (const std::exception& e) {
      error = std::string("error: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ClaimRecord rec{ids[i].first, ids[i].second, ClaimVerdict::fail, std::nullopt, ms};
      if (error.empty()) {
        const Verdict& v = verdicts[i];
        if (v.claim_id != ids[i].first) {
          rec.witness = "error: verdict " + v.claim_id + " reported under " + ids[i].first;
        } else {
          rec.verdict = v.holds ? ClaimVerdict::pass : ClaimVerdict::fail;
          rec.witness = v.witness.empty() ? std::optional<std::string>(v.holds ? "holds" : "no witness recorded")
                                          : std::optional<std::string>(v.witness);
          if (!v.detail.empty()) out_.dumps[rec.id] = v.detail;
        }
      } else {
        rec.witness = error;
      }
      out_.claims.push_back(std::move(rec));
    }
  }

  void single(const std::string& id, const std::string& location, const std::function<Verdict()>& run) {
    batch({{id, location}}, [&] { return std::vector<Verdict>{run()}; });
  }

  void skipped(const std::string& id, const std::string& location, const std::string& reason) {
    out_.claims.push_back(ClaimRecord{id, location, ClaimVerdict::skipped, reason, 0});
  }

 private:
  SuiteOutput& out_;
};

inline Verdict decomposition_claim(std::string id, const RootSystem& rs, const FormalCharacter& chi,
                                   const std::vector<std::size_t>& expected_fundamentals) {
  IrrDecomposition expected{rs.kind(), {}};
  for (std::size_t i : expected_fundamentals) expected.terms[rs.fundamental(i)] += 1;
  const IrrDecomposition got = decompose(rs, chi);
  Verdict v;
  v.claim_id = std::move(id);
  v.holds = got == expected;
  std::string names;
  for (const auto& [w, m] : got.terms) {
    std::string label = w.to_string();
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
      if (rs.fundamental(i) == w) label = "varpi" + std::to_string(i);
    }
    names += (names.empty() ? "" : " + ") + (m == 1 ? "" : m.str() + " ") + label;
  }
  v.witness = v.holds ? names : "got " + names + "; expected " + expected.to_string();
  v.detail = got.to_string();
  return v;
}

inline Verdict root_count_claim(std::string id, RootKind kind, std::size_t roots, std::size_t rank) {
  const RootSystem& rs = root_system(kind);
  Verdict v;
  v.claim_id = std::move(id);
  v.holds = rs.all_roots().size() == roots && rs.positive_roots().size() == roots / 2 && rs.rank() == rank;
  v.witness = std::to_string(rs.all_roots().size()) + " roots, " + std::to_string(rs.positive_roots().size()) +
              " positive, rank " + std::to_string(rs.rank()) + ", rho = " + rs.weyl_vector().to_string();
  return v;
}

inline Verdict weyl_order_claim(std::string id, RootKind kind, const Integer& expected, bool allow_slow) {
  const RootSystem& rs = root_system(kind);
  Verdict v;
  v.claim_id = std::move(id);
  const Integer order = weyl_group_order(rs, allow_slow);
  v.holds = order == expected;
  v.witness = "|W| = " + order.str();
  if (kind != RootKind::E8) {
    const Integer chain = weyl_group_order_by_chain(rs);
    v.holds = v.holds && chain == order;
    v.witness += " (rho orbit; stabilizer chain agrees: " + chain.str() + ")";
  } else {
    v.witness += " (stabilizer chain)";
  }
  return v;
}

}  // namespace detail

inline SuiteOutput run_dims(const RunOptions& opts) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  const RootSystem& e6 = root_system(RootKind::E6);

  b.single("table-1", "Table 1", [&] {
    const std::array<long long, 6> expected = {27, 351, 351, 2925, 78, 27};
    Verdict v;
    v.claim_id = "table-1";
    v.holds = true;
    for (std::size_t i = 1; i <= 6; ++i) {
      const Integer d = weyl_dimension(e6, DominantWeight(e6, e6.fundamental(i)));
      const Integer from_character = e6_fundamental_character(i).dimension();
      const bool ok = d == expected[i - 1] && from_character == d;
      v.holds = v.holds && ok;
      v.witness += (i > 1 ? "\n" : "") + std::string("varpi") + std::to_string(i) + "  " + d.str() + (ok ? "" : "  MISMATCH");
      v.detail += "varpi" + std::to_string(i) + " = " + e6.fundamental(i).to_string() + "  dim " + d.str() + "\n";
    }
    return v;
  });

  b.single("fundamental-weights-e6", "Section 3, fundamental weights of E6", [&] {
    const Rational third = frac(1, 3), sixth = frac(1, 6), half = frac(1, 2);
    const std::array<WeightVector, 6> printed = {
        WeightVector({1, 0, 0, 0, 0, -third, -third, -third}),
        WeightVector({frac(3, 2), -half, half, half, half, -sixth, -sixth, -sixth}),
        WeightVector({frac(3, 2), half, half, half, half, sixth, sixth, sixth}),
        WeightVector({2, 0, 0, 1, 1, 0, 0, 0}),
        WeightVector({1, 0, 0, 0, 1, 0, 0, 0}),
        WeightVector({1, 0, 0, 0, 0, third, third, third}),
    };
    Verdict v;
    v.claim_id = "fundamental-weights-e6";
    v.holds = true;
    for (std::size_t i = 1; i <= 6; ++i) {
      const bool ok = e6.fundamental(i) == printed[i - 1];
      v.holds = v.holds && ok;
      if (!ok) v.witness += "varpi" + std::to_string(i) + " computed " + e6.fundamental(i).to_string() + "; ";
    }
    if (v.holds) v.witness = "all six agree; varpi5 = " + e6.fundamental(5).to_string() + " is a root";
    v.holds = v.holds && e6.is_root(e6.fundamental(5));
    return v;
  });

  b.single("roots-e8", "Section 3, roots of E8", [] { return detail::root_count_claim("roots-e8", RootKind::E8, 240, 8); });
  b.single("roots-e6", "Section 3, roots of E6", [] { return detail::root_count_claim("roots-e6", RootKind::E6, 72, 6); });
  b.single("roots-d5", "Section 4, roots of Spin(10)", [] { return detail::root_count_claim("roots-d5", RootKind::D5, 40, 5); });

  b.single("weyl-order-e6", "sanity anchor", [&] { return detail::weyl_order_claim("weyl-order-e6", RootKind::E6, 51840, false); });
  b.single("weyl-order-d5", "sanity anchor", [&] { return detail::weyl_order_claim("weyl-order-d5", RootKind::D5, 1920, false); });
  if (opts.allow_slow) {
    b.single("weyl-order-e8", "sanity anchor",
             [&] { return detail::weyl_order_claim("weyl-order-e8", RootKind::E8, Integer(696729600), true); });
  } else {
    b.skipped("weyl-order-e8", "sanity anchor", "needs --allow-slow");
  }

  const detail::SuiteBuilder::Located exterior_ids = {
      {"prop-3.2-lambda2-varpi1", "Proposition 3.2"}, {"prop-3.2-lambda2-varpi6", "Proposition 3.2"},
      {"prop-3.2-lambda2-varpi5", "Proposition 3.2"}, {"prop-3.2-lambda3-varpi1", "Proposition 3.2"},
      {"prop-3.2-lambda3-varpi6", "Proposition 3.2"}};
  b.batch(exterior_ids, [&] {
    return std::vector<Verdict>{
        detail::decomposition_claim(exterior_ids[0].first, e6, exterior_power(2, e6_fundamental_character(1)), {2}),
        detail::decomposition_claim(exterior_ids[1].first, e6, exterior_power(2, e6_fundamental_character(6)), {3}),
        detail::decomposition_claim(exterior_ids[2].first, e6, exterior_power(2, e6_fundamental_character(5)), {4, 5}),
        detail::decomposition_claim(exterior_ids[3].first, e6, exterior_power(3, e6_fundamental_character(1)), {4}),
        detail::decomposition_claim(exterior_ids[4].first, e6, exterior_power(3, e6_fundamental_character(6)), {4}),
    };
  });
  return out;
}

inline SuiteOutput run_table2(const RunOptions&) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  b.single("lemma-4.1", "Lemma 4.1", [] { return verify_spin10_identity().verdict; });
  b.single("table-2", "Table 2", [] {
    const std::vector<WeightTypeRow> expected = {
        {"+-xi+-xj+-xk+-xl", 80, 3, 1, 4}, {"+-2xi+-xj+-xk", 240, 1, 0, 1}, {"+-xi+-xj", 40, 11, 3, 14},
        {"+-2xi", 10, 4, 0, 4},            {"0", 1, 30, 10, 40}};
    const std::vector<WeightTypeRow> rows = weight_type_rows();
    Verdict v;
    v.claim_id = "table-2";
    v.holds = rows == expected;
    v.witness = "weight type          count  Lambda2(U2)  U4  U1xU3";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::string label = r.weight_type;
      label.resize(20, ' ');
      v.witness += "\n" + label + " " + std::to_string(r.count) + "  " + r.mult_lambda2_u2.str() + "  " + r.mult_u4.str() +
                   "  " + r.mult_u1_u3.str() + (i < expected.size() && r == expected[i] ? "" : "  MISMATCH");
    }
    return v;
  });
  b.single("clifford-relation", "Section 4, Delta+ Delta- = 1 + lambda2 + lambda4", [] { return verify_clifford_relation(); });
  return out;
}

inline SuiteOutput run_branch(const RunOptions&) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  b.single("delta8-restriction", "Section 3, restriction of Delta8+", [] { return verify_delta8_restriction(); });
  b.batch({{"eq-3.4-V", "Equation 3.4"}, {"eq-3.4-Vprime", "Equation 3.4"}}, [] { return verify_minuscule_restrictions(); });
  b.single("eq-3.5", "Equation 3.5", [] { return verify_e8_adjoint_restriction(); });
  b.single("eq-3.6", "Equation 3.6", [] { return verify_e8_to_e6(); });
  b.single("eq-4.2", "Equation 4.2", [] { return verify_adjoint_e6_restriction(); });
  b.single("center-congruence", "Section 3, centre of Spin(10) x S^1", [] { return verify_center_congruence(); });
  return out;
}

inline SuiteOutput run_restrict(const RunOptions&) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  b.batch({{"prop-4.2-i", "Proposition 4.2 (i)"},
           {"prop-4.2-ii", "Proposition 4.2 (ii)"},
           {"prop-4.2-iii", "Proposition 4.2 (iii)"},
           {"prop-4.2-iv", "Proposition 4.2 (iv)"},
           {"prop-4.2-v", "Proposition 4.2 (v)"},
           {"prop-4.2-vi", "Proposition 4.2 (vi)"}},
          [] { return verify_restriction_formulas(); });
  b.batch({{"eq-4.3", "Equation 4.3"}, {"eq-4.4", "Equation 4.4"}, {"eq-4.5", "Equation 4.5"}, {"eq-4.7", "Equation 4.7"}},
          [] { return verify_graded_exterior_squares(); });
  b.single("lambda-ring-crosscheck", "Section 4, restriction is a lambda-ring homomorphism",
           [] { return verify_lambda_ring_crosscheck(); });
  return out;
}

inline SuiteOutput run_tor(const RunOptions& opts) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  const IntPoly t = IntPoly::variable();
  auto poly_claim = [](std::string id, const std::string& what, const IntPoly& got, const IntPoly& expected) {
    Verdict v;
    v.claim_id = std::move(id);
    v.holds = got == expected;
    v.witness = what + " = " + got.to_string() + (v.holds ? "" : "; expected " + expected.to_string());
    return v;
  };

  b.batch({{"lemma-5.2-a", "Lemma 5.2 (a)"},
           {"lemma-5.2-b", "Lemma 5.2 (b)"},
           {"lemma-5.2-c", "Lemma 5.2 (c)"},
           {"lemma-5.2-d", "Lemma 5.2 (d)"},
           {"lemma-5.2-e", "Lemma 5.2 (e)"},
           {"lemma-5.2-lambda4", "Lemma 5.2, lambda4 via Delta+ Delta- = 1 + lambda2 + lambda4"},
           {"lemma-5.2-crosscheck", "Equation 4.5 at xi = 1"},
           {"augmentation", "Section 5, x and y lie in the augmentation ideal"}},
          [&] {
            const BImages bi = derive_b_images();
            const IntPoly spin = IntPoly(26) - t;
            Verdict a = poly_claim("lemma-5.2-a", "Delta-", bi[Gen::DM], spin);
            const bool plus_ok = bi[Gen::DP] == spin;
            a.holds = a.holds && plus_ok;
            a.witness += "; Delta+ = " + bi[Gen::DP].to_string();
            std::string steps;
            for (const auto& s : bi.steps) steps += s + "\n";
            a.detail = steps;
            const IntPoly cube = (t - IntPoly(10)) * (t - IntPoly(10)) * (t - IntPoly(10));
            Verdict aug;
            aug.claim_id = "augmentation";
            aug.holds = bi.xbar.evaluate(10) == 0 && bi.ybar.evaluate(10) == 0;
            aug.witness = "xbar(10) = " + bi.xbar.evaluate(10).str() + ", ybar(10) = " + bi.ybar.evaluate(10).str();
            return std::vector<Verdict>{
                a,
                poly_claim("lemma-5.2-b", "lambda2", bi[Gen::L2], IntPoly(25) + IntPoly(2) * t),
                poly_claim("lemma-5.2-c", "lambda3", bi[Gen::L3], t * t - IntPoly(28) * t + IntPoly(300)),
                poly_claim("lemma-5.2-d", "xbar", bi.xbar, IntPoly()),
                poly_claim("lemma-5.2-e", "ybar", bi.ybar, cube),
                poly_claim("lemma-5.2-lambda4", "lambda4", bi[Gen::L4], t * t - IntPoly(54) * t + IntPoly(650)),
                poly_claim("lemma-5.2-crosscheck", "ybar from the graded form", ybar_from_graded_form(bi), bi.ybar),
                aug,
            };
          });

  b.single("lemma-5.1-generation", "Lemma 5.1", [&] {
    check::Rng rng(opts.seed);
    return check::property_generator_round_trip(rng);
  });

  b.batch({{"koszul-tor", "Section 5.2, Koszul homology"}, {"thm-1.1", "Theorem 1.1"}}, [] {
    const BImages bi = derive_b_images();
    const TorPresentation tor = koszul_tor(bi.xbar, bi.ybar);
    Verdict kt;
    kt.claim_id = "koszul-tor";
    const bool h0_ok = tor.h0.z_structure == ZModule{3, {}, true};
    const bool h1_ok = tor.h1.generators.size() == 1 && tor.h1.relations == tor.h0.relations;
    const bool h2_ok = tor.h2.is_zero();
    kt.holds = h0_ok && h1_ok && h2_ok && tor.euler_characteristic() == 0;
    kt.witness = "H0 = " + tor.h0.to_string() + " (" + tor.h0.z_structure.to_string() + ")\nH1 = " + tor.h1.to_string() +
                 " (" + tor.h1.z_structure.to_string() + ")\nH2 = " + tor.h2.to_string() +
                 "\nEuler characteristic of B-ranks: " + std::to_string(tor.euler_characteristic());

    const KRingPresentation k = kring_presentation(tor);
    Verdict th;
    th.claim_id = "thm-1.1";
    const IntPoly u = k.relation_in_u;
    const bool shape = u.content() == 1 && u.degree() == 3 && u.leading() == 1;
    th.holds = k.relation_is_u_cubed && shape && k.k1_free_rank_one && k.k0_additive == ZModule{3, {}, true};
    th.witness = k.k0_text + "\n" + k.k1_text + "\nK0 additively " + k.k0_additive.to_string() +
                 " with basis 1, u, u^2\nrelation in u: " + u.to_string("u") +
                 "\ncollapse hypotheses: B free over the coefficient ring (generation check); H1 = H0.X is generated by one"
                 " class of degree -1 (collapse criterion cited)";
    return std::vector<Verdict>{kt, th};
  });
  return out;
}

inline SuiteOutput run_tangent(const RunOptions&) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  b.batch({{"prop-5.3-fact-1", "Proposition 5.3, restriction of the adjoint"},
           {"prop-5.3-fact-2", "Proposition 5.3, Delta- is conjugate to Delta+"},
           {"prop-5.3-fact-3", "Proposition 5.3, c(r(alpha')) = 2 + 2 lambda1 + Delta+ + Delta-"},
           {"prop-5.3", "Proposition 5.3"},
           {"thm-1.2", "Theorem 1.2"}},
          [] {
            TangentReport rep = verify_tangent_class();
            std::vector<Verdict> v = rep.facts;
            v.push_back(rep.conclusion);
            Verdict th;
            th.claim_id = "thm-1.2";
            th.holds = rep.conclusion.holds && rep.dim_m == 33;
            th.witness = "dim M = " + std::to_string(rep.dim_m) + "; immerses in R^" +
                         std::to_string(rep.immersion_dimension) + ", not in R^" +
                         std::to_string(rep.nonimmersion_dimension) + " (" + rep.citation_note + ")";
            th.detail = rep.conclusion.detail;
            v.push_back(th);
            return v;
          });
  return out;
}

inline SuiteOutput run_properties(const RunOptions& opts) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  check::Rng rng(opts.seed);
  IrreducibleCache d5(root_system(RootKind::D5));
  b.single("property-exterior-power", "randomized", [&] { return check::property_exterior_power(rng); });
  b.single("property-weyl-invariance", "randomized", [&] { return check::property_weyl_invariance(d5); });
  b.single("property-dimension", "randomized", [&] { return check::property_dimension(rng, d5); });
  b.single("property-decompose", "randomized", [&] { return check::property_decompose(rng, d5); });
  b.single("property-adams", "randomized", [&] { return check::property_adams(rng); });
  b.single("property-freudenthal-oracle", "Spin(10) characters by direct construction",
           [] { return check::property_freudenthal_oracle(); });
  b.single("property-restriction-homomorphism", "Section 4, restriction is a lambda-ring homomorphism",
           [] { return check::property_restriction_homomorphism(); });
  return out;
}

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"dims", "table2", "branch", "restrict", "tor", "tangent", "all"};
  return names;
}

/// Runs one subcommand; `all` adds the randomized property suites.
inline SuiteOutput run_subcommand(const std::string& name, const RunOptions& opts) {
  using Runner = SuiteOutput (*)(const RunOptions&);
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"dims", &run_dims},       {"table2", &run_table2}, {"branch", &run_branch},
      {"restrict", &run_restrict}, {"tor", &run_tor},     {"tangent", &run_tangent}};
  SuiteOutput out;
  for (const auto& [n, run] : table) {
    if (name == n || name == "all") out.append(run(opts));
  }
  if (name == "all") out.append(run_properties(opts));
  if (out.claims.empty()) throw DomainError("unknown subcommand '" + name + "'");
  return out;
}

}  // namespace liekring
