// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 when any
// criterion fails.

#include "godeaux/canring.hpp"
#include "godeaux/datasets.hpp"
#include "support.hpp"
#include "tietze_replay.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

using namespace godeaux;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::string profile(const std::map<int, int>& counts) {
  std::ostringstream os;
  for (const auto& [d, n] : counts) os << (os.tellp() > 0 ? " " : "") << d << "^" << n;
  return os.str();
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome generator_profile(const CanonicalRing& cr) {
  const MinimalGenerators mg = cr.minimal_generators(12);
  std::map<int, int> counts;
  for (int d : mg.set.degrees) ++counts[d];
  const PaperGeneratorCheck pc = cr.verify_paper_generators(12);
  std::size_t members = 0;
  for (const auto& e : pc.entries) members += e.member;
  const bool pass = counts == std::map<int, int>{{2, 2}, {3, 4}, {4, 4}, {5, 3}} && pc.ok() && members == 13 &&
                    pc.entries.size() == 13 && pc.ungenerated_degrees.empty();
  return {pass, "computed " + profile(counts) + "; listed " + std::to_string(members) + "/" +
                    std::to_string(pc.entries.size()) + " members, ungenerated degrees [" +
                    join(pc.ungenerated_degrees) + "]"};
}

Outcome relations(const CanonicalRing& cr, const RelationSet& rels, const GeneratorSet& paper) {
  std::map<int, int> counts;
  for (const auto& [d, n] : rels.counts) counts[d] = static_cast<int>(n);
  std::size_t vanishing = 0;
  const auto& q = cr.quotient();
  for (const auto& r : rels.relations)
    vanishing += q.normal_form(substitute(r, paper.generators, q.ambient())).is_zero();
  const bool pass = rels.total() == 54 &&
                    counts == std::map<int, int>{{6, 6}, {7, 12}, {8, 18}, {9, 12}, {10, 6}} &&
                    vanishing == rels.total();
  return {pass, std::to_string(rels.total()) + " relations " + profile(counts) + ", " + std::to_string(vanishing) +
                    " vanish in S/f"};
}

Outcome hilbert(const CanonicalRing& cr, const RelationSet& rels) {
  const std::vector<long> expected{1, 0, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67};
  std::vector<long> values;
  bool agree = true;
  for (const auto& row : cr.hilbert_consistency(rels, SurfaceInvariants{})) {
    if (row.m > 12) break;
    agree = agree && row.agree();
    values.push_back(row.descend);
  }
  return {agree && values == expected, join(values) + (agree ? ", three computations agree" : ", disagreement")};
}

Outcome residue(const CanonicalRing& cr) {
  const auto& q = cr.quotient();
  const auto& r = cr.residue();
  const bool f_vanishes = r(q.modulus()).is_zero();
  std::mt19937 rng(20240101);
  std::uniform_int_distribution<int> degree(0, 7);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int da = degree(rng), db = degree(rng);
    const Poly a = q.normal_form(testing::random_homogeneous(q.ambient(), da, rng));
    const Poly b = q.normal_form(testing::random_homogeneous(q.ambient(), db, rng));
    const Poly c = q.normal_form(testing::random_homogeneous(q.ambient(), da, rng));
    if (r(q.multiply(a, b), da + db) != r(a, da) * r(b, db)) ++failures;
    if (r(a + c, da) != r(a, da) + r(c, da)) ++failures;
  }
  return {f_vanishes && failures == 0, std::string("residue(f) ") + (f_vanishes ? "= 0" : "!= 0") + ", " +
                                           std::to_string(failures) + " failures on 1000 random pairs"};
}

Outcome tricanonical(const CanonicalRing& cr) {
  const TricanonicalReport t = cr.tricanonical_form();
  const std::vector<std::size_t> expected{0, 0, 0, 0, 0, 0, 0, 0, 1};
  const bool pass = t.kernel_dimensions == expected && t.assignment && t.scale && sgn(*t.scale) != 0 &&
                    t.reference_vanishes;
  std::string detail = "kernel dimensions " + join(t.kernel_dimensions);
  if (t.assignment) detail += ", matches reference with scale " + format_rational(*t.scale);
  else detail += ", no assignment matches the reference";
  detail += t.reference_vanishes ? ", F(g) = 0 mod f" : ", F(g) != 0 mod f";
  return {pass, detail};
}

Outcome base_loci(const CanonicalRing& cr) {
  bool pass = true;
  std::string detail;
  for (int m : {2, 3, 5}) {
    const BaseLocusReport r = cr.base_locus(m);
    bool ok = false;
    if (m == 2) {
      ok = r.verdict == BaseLocusVerdict::nonempty && r.witnesses_checked > 0 && r.witnesses_vanish;
    } else if (r.verdict == BaseLocusVerdict::empty) {
      ok = !r.powers.empty();
      for (const auto& p : r.powers) ok = ok && replay_power_certificate(cr.quotient(), cr.descend_polys(m), p);
    }
    pass = pass && ok;
    detail += (detail.empty() ? "" : "; ") + std::string("m=") + std::to_string(m) + " " + to_string(r.verdict) +
              (ok ? " (certificate replayed)" : " (certificate rejected)");
  }
  return {pass, detail};
}

Outcome fourcanonical(const CanonicalRing& cr) {
  const FourCanonicalReport r = cr.fourcanonical_degree(7);
  bool pass = true;
  std::vector<long> window, all;
  for (const auto& [d, v] : r.second_differences) {
    all.push_back(v);
    if (d >= 3 && d <= 5) {
      window.push_back(v);
      pass = pass && v == 16;
    }
  }
  return {pass && window.size() == 3, "second differences at d=3,4,5: " + join(window) +
                                          " (h = " + join(r.h) + "; d=3..7: " + join(all) + ")"};
}

Outcome generation_bound(const CanonicalRing& cr) {
  const MinimalGenerators mg = cr.minimal_generators(10);
  std::vector<std::size_t> extra;
  for (int m = 6; m <= 10; ++m) extra.push_back(mg.product_codimension.at(m));
  bool pass = true;
  for (auto e : extra) pass = pass && e == 0;
  return {pass, "new generators in degrees 6..10: " + join(extra)};
}

Outcome topology() {
  const TopologyModel m = parse_topology(default_topology_text());
  std::vector<std::string> h;
  for (const auto& g : homology(m.model())) h.push_back(g.to_string());
  const GroupPresentation g{{"alpha", "beta"},
                            {parse_word("beta alpha^-1 beta", {"alpha", "beta"}),
                             parse_word("alpha^-1 beta alpha", {"alpha", "beta"})}};
  const bool ab = abelianization(g).is_trivial();
  const TietzeResult t = tietze_trivialize(g, 1000);
  const bool cert = t.certificate && t.steps_used <= 1000 && testing::replay(*t.certificate);
  const bool pass = h == std::vector<std::string>{"Z", "0", "Z^9", "Z", "Z"} && ab && cert;
  return {pass, "H = " + join(h) + ", abelianization " + abelianization(g).to_string() + ", " +
                    (cert ? "certificate of " + std::to_string(t.steps_used) + " steps replayed" : "no certificate")};
}

Outcome deformation() {
  const DefcalcData data = parse_defcalc(default_defcalc_text());
  std::map<std::string, std::vector<long>> degrees;
  for (const auto& c : data.configs)
    for (const auto& t : t1_degrees(c)) degrees[c.name].push_back(t.degree);
  const bool pass = degrees["X"] == std::vector<long>{1} && degrees["Y_D0"] == std::vector<long>{-5} &&
                    degrees["Y_A"] == std::vector<long>{2} && section_bound(1, 2) == 1 && section_bound(-5, 0) == 0 &&
                    section_bound(-5, 3) == 0;
  return {pass, "X " + join(degrees["X"]) + ", D0 " + join(degrees["Y_D0"]) + ", A_i " + join(degrees["Y_A"]) +
                    "; bounds " + std::to_string(section_bound(1, 2)) + "," + std::to_string(section_bound(-5, 0))};
}

Outcome determinism() {
  const std::string base = std::string(GODEAUX_CLI) + " --format structured";
  int s1 = 0, s4 = 0;
  const std::string one = capture(base + " --jobs 1 canring", s1);
  const std::string four = capture(base + " --jobs 4 canring", s4);
  const bool pass = !one.empty() && one == four && s1 == s4;
  return {pass, std::to_string(one.size()) + " and " + std::to_string(four.size()) + " bytes, " +
                    (one == four ? "identical" : "different")};
}

}  // namespace

int main() {
  const CanonicalRing cr(default_instance(), 4);
  const GeneratorSet paper = cr.paper_generators();
  const RelationSet rels = cr.relations(paper, 12);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"generator profile", [&] { return generator_profile(cr); }},
      {"relations", [&] { return relations(cr, rels, paper); }},
      {"hilbert triple-consistency", [&] { return hilbert(cr, rels); }},
      {"residue well-definedness", [&] { return residue(cr); }},
      {"tricanonical image", [&] { return tricanonical(cr); }},
      {"base loci", [&] { return base_loci(cr); }},
      {"four-canonical degree", [&] { return fourcanonical(cr); }},
      {"generation bound", [&] { return generation_bound(cr); }},
      {"topology", [] { return topology(); }},
      {"deformation degrees", [] { return deformation(); }},
      {"determinism", [] { return determinism(); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << ". " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
