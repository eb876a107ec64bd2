#include "ncpart/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

namespace ncpart {

std::string Label::to_string() const {
  switch (tag) {
    case Tag::ZeroPlus: return "0+";
    case Tag::ZeroMinus: return "0-";
    case Tag::Int: return std::to_string(k);
  }
  return "?";
}

Label Label::parse(std::string_view text) {
  if (text == "0+") return zero_plus();
  if (text == "0-") return zero_minus();
  try {
    return integer(std::stol(std::string(text)));
  } catch (const std::exception&) {
    throw Error(Err::ParseError, "bad label '" + std::string(text) + "'");
  }
}

std::string SClass::to_string() const {
  switch (kind) {
    case SKind::One: return "{[1]}";
    case SKind::PlusMinus: return "{[-1],[1]}";
    case SKind::CalS: return "S4";
    case SKind::Zs: return s > 0 ? "Z" + std::to_string(s) : "Z(no cyclic witness)";
  }
  return "?";
}

IClass compute_I(const Category& cat) {
  return cat.member(pi(2)) == Membership::Yes ? IClass::Zstar : IClass::PlusMinusOne;
}

SClass compute_S(const Category& cat) {
  SClass out;
  out.certified_bound = cat.bound();
  out.oracle_exact = cat.oracle_backed();
  const bool has_zero = cat.member(pi_zero_plus()) == Membership::Yes;
  const IClass I = compute_I(cat);
  if (!has_zero) {
    out.kind = equivalent(cat, pi(1), pi(-1)) == Membership::Yes ? SKind::One : SKind::PlusMinus;
    return out;
  }
  if (I == IClass::PlusMinusOne) {
    out.kind = SKind::CalS;
    return out;
  }
  out.kind = SKind::Zs;
  out.s = 0;
  for (int x = 1; x <= cat.bound(); ++x) {
    if (cat.member(theta(x)) == Membership::Yes) {
      out.s = x;
      break;
    }
  }
  if (out.s == 0) {
    out.unknown_tail = true;
    // The equal-count predicate excludes every one-row block outright.
    if (cat.oracle_backed() && cat.oracle()->kind == FamilyKind::Cinf) {
      out.infinite_certified = true;
      out.unknown_tail = false;
    }
  }
  return out;
}

FusionSystem::FusionSystem(const Category& cat, SClass cls) : cls_(cls) { (void)cat; }

FusionSystem fusion_system(const Category& cat) { return FusionSystem(cat, compute_S(cat)); }

Label FusionSystem::canonical(Label x) const {
  switch (cls_.kind) {
    case SKind::One:
      return Label::integer(1);
    case SKind::PlusMinus:
      if (x.tag != Label::Tag::Int || (x.k != 1 && x.k != -1))
        throw Error(Err::RangeError, "label " + x.to_string() + " not in {[-1],[1]}");
      return x;
    case SKind::CalS:
      if (x.tag == Label::Tag::Int && x.k != 1 && x.k != -1)
        throw Error(Err::RangeError, "label " + x.to_string() + " not in the four-element set");
      return x;
    case SKind::Zs: {
      long v = x.tag == Label::Tag::Int ? x.k : 0;
      if (cls_.s > 0) v = ((v % cls_.s) + cls_.s) % cls_.s;
      return Label::integer(v);
    }
  }
  return x;
}

Label FusionSystem::conjugate(Label x) const {
  x = canonical(x);
  if (x.tag == Label::Tag::ZeroPlus || x.tag == Label::Tag::ZeroMinus) return x;
  return canonical(Label::integer(-x.k));
}

std::optional<Label> FusionSystem::fuse(Label a, Label b) const {
  a = canonical(a);
  b = canonical(b);
  switch (cls_.kind) {
    case SKind::One:
    case SKind::PlusMinus:
      // Sums of nonzero one-letter indices leave {-1,1}, and the mixed
      // one-block classes are absent.
      return std::nullopt;
    case SKind::Zs:
      return canonical(Label::integer(a.k + b.k));
    case SKind::CalS: {
      auto is = [](const Label& x, const char* name) { return x.to_string() == name; };
      // alpha = 0+, beta = 0-, gamma = 1, conj(gamma) = -1
      if (is(a, "1") && is(b, "-1")) return Label::zero_plus();
      if (is(a, "-1") && is(b, "1")) return Label::zero_minus();
      if (is(a, "0+") && is(b, "0+")) return Label::zero_plus();
      if (is(a, "0-") && is(b, "0-")) return Label::zero_minus();
      if (is(a, "1") && is(b, "0-")) return Label::integer(1);
      if (is(a, "0+") && is(b, "1")) return Label::integer(1);
      if (is(a, "-1") && is(b, "0+")) return Label::integer(-1);
      if (is(a, "0-") && is(b, "-1")) return Label::integer(-1);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Partition FusionSystem::representative(Label x) const {
  x = canonical(x);
  if (x.tag == Label::Tag::ZeroPlus) return pi_zero_plus();
  if (x.tag == Label::Tag::ZeroMinus) return pi_zero_minus();
  if (x.k == 0) return pi_zero_plus();
  return pi(static_cast<int>(x.k));
}

std::vector<Label> FusionSystem::alphabet(int max_points) const {
  std::vector<Label> out;
  switch (cls_.kind) {
    case SKind::One:
      out.push_back(Label::integer(1));
      break;
    case SKind::PlusMinus:
      out.push_back(Label::integer(-1));
      out.push_back(Label::integer(1));
      break;
    case SKind::CalS:
      out.push_back(Label::zero_minus());
      out.push_back(Label::zero_plus());
      out.push_back(Label::integer(-1));
      out.push_back(Label::integer(1));
      break;
    case SKind::Zs:
      if (cls_.s > 0) {
        for (long j = 0; j < cls_.s; ++j)
          if (representative(Label::integer(j)).total_points() <= max_points)
            out.push_back(Label::integer(j));
      } else {
        for (long j = -max_points / 2; j <= max_points / 2; ++j)
          if (representative(Label::integer(j)).total_points() <= max_points)
            out.push_back(Label::integer(j));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string word_to_string(const FusionWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += w[i].to_string();
  }
  return s;
}

FusionWord conjugate_word(const FusionSystem& sys, const FusionWord& w) {
  FusionWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = sys.conjugate(x);
  return out;
}

WordMultiset word_tensor(const FusionSystem& sys, const FusionWord& w, const FusionWord& wp) {
  WordMultiset out;
  const size_t n = w.size(), np = wp.size();
  for (size_t z = 0; z <= std::min(n, np); ++z) {
    bool match = true;
    for (size_t i = 0; i < z && match; ++i)
      match = sys.canonical(wp[i]) == sys.conjugate(w[n - 1 - i]);
    if (!match) continue;
    FusionWord a(w.begin(), w.end() - static_cast<long>(z));
    FusionWord b(wp.begin() + static_cast<long>(z), wp.end());
    FusionWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    for (auto& x : ab) x = sys.canonical(x);
    ++out[ab];
    if (!a.empty() && !b.empty()) {
      if (auto fused = sys.fuse(a.back(), b.front())) {
        FusionWord astarb(a.begin(), a.end() - 1);
        astarb.push_back(*fused);
        astarb.insert(astarb.end(), b.begin() + 1, b.end());
        for (auto& x : astarb) x = sys.canonical(x);
        ++out[astarb];
      }
    }
  }
  return out;
}

WordMultiset element_tensor(const FusionSystem& sys, const WordMultiset& a, const WordMultiset& b) {
  WordMultiset out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      for (const auto& [w, c] : word_tensor(sys, wa, wb)) out[w] += ca * cb * c;
    }
  }
  return out;
}

Partition phi(const FusionSystem& sys, const FusionWord& w) {
  Partition out = empty_partition();
  for (const auto& x : w) out = tensor(out, sys.representative(x));
  return out;
}

std::vector<TensorSummand> rep_tensor(const Category& cat, const Partition& p, const Partition& q) {
  if (!is_projective(p) || !is_projective(q))
    throw Error(Err::NotProjective, "rep_tensor needs projective partitions");
  std::vector<TensorSummand> out;
  {
    TensorSummand t0;
    t0.kind = SummandKind::Tensor;
    t0.k = 0;
    t0.partition = tensor(p, q);
    t0.present = cat.member(t0.partition);
    out.push_back(std::move(t0));
  }
  const auto dp = through_block_decomposition(p);
  const auto dq = through_block_decomposition(q);
  const int tp = dp.through, tq = dq.through;
  const Partition pu_qu = tensor(dp.upper, dq.upper);
  for (int k = 1; k <= std::min(tp, tq); ++k) {
    for (const SummandKind kind : {SummandKind::Square, SummandKind::Boxvert}) {
      Partition mid = kind == SummandKind::Square ? h_square(k) : h_boxvert(k);
      Partition sandwich = mid;
      for (int i = 0; i < tp - k; ++i) sandwich = tensor(white_identity(), sandwich);
      for (int i = 0; i < tq - k; ++i) sandwich = tensor(sandwich, white_identity());
      Partition full = compose(adjoint(pu_qu), compose(sandwich, pu_qu).partition).partition;
      TensorSummand ts;
      ts.kind = kind;
      ts.k = k;
      ts.partition = full;
      ts.present = cat.member(full);
      out.push_back(std::move(ts));
    }
  }
  return out;
}

namespace {

// Every word over the alphabet whose phi image has at most word_points
// points, by nondecreasing length.
std::vector<FusionWord> words_within(const FusionSystem& sys, int word_points, int max_len) {
  std::vector<FusionWord> out{{}};
  std::vector<FusionWord> frontier{{}};
  const auto alpha = sys.alphabet(word_points);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<FusionWord> next;
    for (const auto& w : frontier) {
      for (const auto& x : alpha) {
        FusionWord nw = w;
        nw.push_back(x);
        int pts = 0;
        for (const auto& y : nw) pts += sys.representative(y).total_points();
        if (pts <= word_points) next.push_back(nw);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

FreenessReport is_free(const Category& cat, int scan_points, int word_points) {
  FreenessReport rep;
  rep.scan_points = scan_points > 0 ? scan_points : std::min(cat.bound(), 6);

  const auto wit = find_blockstability_witness(cat, rep.scan_points);
  rep.witness = wit.witness;
  rep.no_witness = !wit.witness.has_value();
  rep.block_stable = wit.block_stable != Tri::No;

  // No nontrivial one-dimensional representation: every through-free
  // projective member is equivalent to the empty partition.
  rep.no_nontrivial_onedim = true;
  for (const auto& m : cat.members_upto(rep.scan_points)) {
    if (m.upper_len() != m.lower_len() || !is_projective(m)) continue;
    if (stats(m).through != 0) continue;
    if (equivalent_to_empty(cat, m) != Membership::Yes) {
      rep.no_nontrivial_onedim = false;
      break;
    }
  }

  // The label map respects tensor products: strand-collapsing summands
  // correspond exactly to word splittings, with matching classes.
  rep.phi_respects_tensor = true;
  const auto sys = fusion_system(cat);
  const auto words = words_within(sys, word_points, 3);
  for (const auto& w : words) {
    for (const auto& wp : words) {
      const Partition P = phi(sys, w);
      const Partition Q = phi(sys, wp);
      if (P.total_points() + Q.total_points() > 2 * word_points) continue;
      std::vector<TensorSummand> summands;
      try {
        summands = rep_tensor(cat, P, Q);
      } catch (const Error&) {
        ++rep.skipped_word_pairs;
        continue;
      }
      ++rep.checked_word_pairs;
      const size_t n = w.size(), np = wp.size();
      for (const auto& ts : summands) {
        const size_t z = ts.kind == SummandKind::Boxvert ? static_cast<size_t>(ts.k) - 1
                                                         : static_cast<size_t>(ts.k);
        bool zmatch = z <= std::min(n, np);
        for (size_t i = 0; i < z && zmatch; ++i)
          zmatch = sys.canonical(wp[i]) == sys.conjugate(w[n - 1 - i]);
        std::optional<FusionWord> expect;
        if (zmatch) {
          FusionWord a(w.begin(), w.end() - static_cast<long>(z));
          FusionWord b(wp.begin() + static_cast<long>(z), wp.end());
          if (ts.kind == SummandKind::Boxvert) {
            if (!a.empty() && !b.empty()) {
              if (auto fused = sys.fuse(a.back(), b.front())) {
                FusionWord word(a.begin(), a.end() - 1);
                word.push_back(*fused);
                word.insert(word.end(), b.begin() + 1, b.end());
                expect = word;
              }
            }
          } else {
            FusionWord word = a;
            word.insert(word.end(), b.begin(), b.end());
            expect = word;
          }
        }
        if (ts.present == Membership::Unknown) {
          ++rep.skipped_word_pairs;
          continue;
        }
        const bool present = ts.present == Membership::Yes;
        if (present != expect.has_value()) {
          rep.phi_respects_tensor = false;
          continue;
        }
        if (present) {
          const Partition target = phi(sys, *expect);
          const Membership eq = equivalent(cat, ts.partition, target);
          if (eq == Membership::NoWithinBound) rep.phi_respects_tensor = false;
        }
      }
    }
  }

  if (!rep.no_witness)
    rep.free = Tri::No;
  else if (rep.block_stable && rep.no_nontrivial_onedim && rep.phi_respects_tensor)
    rep.free = Tri::Yes;
  else
    rep.free = Tri::Unknown;
  return rep;
}

std::string JClass::to_string() const {
  if (is_nZ) return n == 0 ? "{0}" : std::to_string(n) + "Z";
  std::string s = "{";
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elements[i]);
  }
  return s + "}";
}

std::string GClass::to_string() const {
  if (order == 1) return "trivial";
  if (order == 0) return "Z(no finiteness witness)";
  return "Z" + std::to_string(order);
}

JClass compute_J(const Category& cat) {
  JClass out;
  out.i = compute_I(cat);
  if (out.i == IClass::Zstar) {
    out.is_nZ = true;
    out.n = 0;
    for (int j = 1; 2 * j <= cat.bound(); ++j) {
      if (cat.member(beta_partition(j)) == Membership::Yes) {
        out.n = j;
        break;
      }
    }
    return out;
  }
  out.elements.push_back(0);
  for (int j = 1; j <= 2; ++j) {
    if (2 * j > cat.bound()) continue;
    const bool pos = cat.member(beta_partition(j)) == Membership::Yes;
    const bool neg = cat.member(beta_partition(-j)) == Membership::Yes;
    assert(pos == neg);
    if (pos) {
      out.elements.push_back(j);
      out.elements.push_back(-j);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

namespace {

Partition theta_power(int s, int count) {
  Partition out = empty_partition();
  for (int i = 0; i < count; ++i) out = tensor(out, theta(s));
  return out;
}

}  // namespace

GClass compute_G(const Category& cat) {
  GClass out;
  const JClass J = compute_J(cat);
  if (J.i == IClass::Zstar) {
    if (J.n == 0) {
      out.order = 1;
      out.generator = "";
      return out;
    }
    const SClass S = compute_S(cat);
    out.generator_index = J.n;
    out.generator = "beta_" + std::to_string(J.n);
    if (S.kind == SKind::Zs && S.s > 0) {
      assert(S.s % J.n == 0);
      out.order = S.s / J.n;
    } else {
      out.order = 0;
      out.unknown_tail = true;
    }
    return out;
  }
  const bool has1 = std::count(J.elements.begin(), J.elements.end(), 1) > 0;
  const bool has2 = std::count(J.elements.begin(), J.elements.end(), 2) > 0;
  if (!has1 && !has2) {
    out.order = 1;
    return out;
  }
  const int gen = has1 ? 1 : 2;
  out.generator_index = gen;
  out.generator = "beta_" + std::to_string(gen);
  out.order = 0;
  for (int k = 1; gen * k <= cat.bound(); ++k) {
    if (cat.member(theta_power(gen, k)) == Membership::Yes) {
      out.order = k;
      break;
    }
  }
  if (out.order == 0) out.unknown_tail = true;
  return out;
}

Tri is_G_finite(const Category& cat) {
  const GClass g = compute_G(cat);
  if (g.order == 1) return Tri::Yes;
  for (int s = 1; s <= cat.bound(); ++s) {
    for (int k = 1; s * k <= cat.bound(); ++k) {
      if (cat.member(theta_power(s, k)) == Membership::Yes) return Tri::Yes;
    }
  }
  return Tri::Unknown;
}

PhiInjectivityReport phi_injectivity_check(const Category& cat, int length_bound) {
  PhiInjectivityReport out;
  const auto sys = fusion_system(cat);
  const auto words = words_within(sys, 2 * cat.bound(), length_bound);
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = i + 1; j < words.size(); ++j) {
      const Partition P = phi(sys, words[i]);
      const Partition Q = phi(sys, words[j]);
      if (words[i].size() != words[j].size()) {
        // distinct through-block counts force inequivalence
        ++out.pairs_checked;
        continue;
      }
      Membership eq;
      try {
        eq = equivalent(cat, P, Q);
      } catch (const Error&) {
        ++out.pairs_skipped;
        continue;
      }
      if (eq == Membership::Unknown) {
        ++out.pairs_skipped;
        continue;
      }
      ++out.pairs_checked;
      if (eq == Membership::Yes) {
        out.injective_within_horizon = false;
        if (!out.violation) out.violation = {words[i], words[j]};
      }
    }
  }
  return out;
}

SubringCaseReport subring_case_report(const Category& cat) {
  SubringCaseReport out;
  out.beta1_member = cat.member(beta_partition(1)) == Membership::Yes;
  out.beta2_member = cat.member(beta_partition(2)) == Membership::Yes;
  out.theta2_member = cat.member(theta(2)) == Membership::Yes;
  out.one_equiv_minus_one = equivalent(cat, pi(1), pi(-1)) == Membership::Yes;
  const SClass S = compute_S(cat);
  const JClass J = compute_J(cat);
  const GClass G = compute_G(cat);
  out.s_class = S.to_string();
  out.j_class = J.to_string();
  out.g_class = G.to_string();
  const bool j_is_unit = !J.is_nZ && J.elements == std::vector<long>{-1, 0, 1};
  if (G.order == 1) {
    out.case_id = 1;
    out.description = "no nontrivial one-dimensional representation";
  } else if (out.beta2_member || out.one_equiv_minus_one) {
    out.case_id = 2;
    out.description = "orthogonal-type family (bistochastic or permutation with a sign)";
  } else if (S.kind == SKind::CalS && j_is_unit) {
    out.case_id = 3;
    out.description = "four one-block classes with J = {-1,0,1}";
  } else if (S.kind == SKind::PlusMinus && j_is_unit) {
    out.case_id = 4;
    out.description = "two one-block classes with J = {-1,0,1}";
  } else {
    out.case_id = 0;
    out.description = "evidence outside the four cases";
  }
  return out;
}

RingGenerationReport ring_generation_verify(const Category& cat, int t_bound, int scan_points) {
  RingGenerationReport out;
  const int scan = scan_points > 0 ? scan_points : std::min(cat.bound(), 6);

  std::vector<Partition> projs;
  for (const auto& m : cat.members_upto(scan))
    if (m.upper_len() == m.lower_len() && is_projective(m) && is_noncrossing(m)) projs.push_back(m);
  const auto classes = equivalence_classes(cat, projs);
  std::vector<Partition> rep_of_class;
  for (const auto& cls : classes) {
    Partition best = projs[cls[0]];
    for (size_t idx : cls)
      if (projs[idx] < best) best = projs[idx];
    rep_of_class.push_back(best);
  }
  auto class_of = [&](const Partition& p) -> int {
    for (size_t c = 0; c < classes.size(); ++c) {
      if (stats(rep_of_class[c]).through != stats(p).through) continue;
      if (equivalent(cat, rep_of_class[c], p) == Membership::Yes) return static_cast<int>(c);
    }
    return -1;
  };

  std::vector<bool> reached(classes.size(), false);
  // Seeds: label words (single letters suffice together with products) and
  // every through-free class.
  const auto sys = fusion_system(cat);
  for (const auto& x : sys.alphabet(scan)) {
    const int c = class_of(sys.representative(x));
    if (c >= 0) reached[static_cast<size_t>(c)] = true;
  }
  for (size_t c = 0; c < classes.size(); ++c)
    if (stats(rep_of_class[c]).through == 0) reached[c] = true;

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < classes.size(); ++a) {
      if (!reached[a]) continue;
      for (size_t b = 0; b < classes.size(); ++b) {
        if (!reached[b]) continue;
        if (rep_of_class[a].total_points() + rep_of_class[b].total_points() > cat.bound()) {
          ++out.skipped_products;
          continue;
        }
        for (const auto& ts : rep_tensor(cat, rep_of_class[a], rep_of_class[b])) {
          if (ts.present != Membership::Yes) continue;
          const int c = class_of(ts.partition);
          if (c >= 0 && !reached[static_cast<size_t>(c)]) {
            reached[static_cast<size_t>(c)] = true;
            changed = true;
          }
        }
      }
    }
  }

  out.all_reached = true;
  for (size_t c = 0; c < classes.size(); ++c) {
    if (stats(rep_of_class[c]).through > t_bound) continue;
    ++out.classes_at_or_below_t;
    if (reached[c]) {
      ++out.reached;
    } else {
      out.all_reached = false;
      if (!out.unreached_representative) out.unreached_representative = rep_of_class[c];
    }
  }
  return out;
}

}  // namespace ncpart
