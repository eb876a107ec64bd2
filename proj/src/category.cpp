#include "ncpart/category.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ncpart {

FamilyTag FamilyTag::parse(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "allnc" || t == "nc") return {FamilyKind::AllNC, 0};
  if (t == "pairs" || t == "on+") return {FamilyKind::Pairs, 0};
  if (t == "unitary" || t == "un+") return {FamilyKind::Unitary, 0};
  if (t == "cinf") return {FamilyKind::Cinf, 0};
  if (t == "c0plus" || t == "c0+") return {FamilyKind::C0plus, 0};
  if (t == "allp" || t == "p") return {FamilyKind::AllP, 0};
  if (t.rfind("cs:", 0) == 0) {
    int s = 0;
    try {
      s = std::stoi(t.substr(3));
    } catch (const std::exception&) {
      throw Error(Err::ParseError, "bad family parameter in '" + t + "'");
    }
    if (s < 1) throw Error(Err::RangeError, "cs family needs s >= 1");
    return {FamilyKind::Cs, s};
  }
  throw Error(Err::ParseError, "unknown family tag '" + t + "'");
}

std::string FamilyTag::to_string() const {
  switch (kind) {
    case FamilyKind::AllNC: return "allnc";
    case FamilyKind::Pairs: return "pairs";
    case FamilyKind::Unitary: return "unitary";
    case FamilyKind::Cs: return "cs:" + std::to_string(s);
    case FamilyKind::Cinf: return "cinf";
    case FamilyKind::C0plus: return "c0plus";
    case FamilyKind::AllP: return "allp";
  }
  return "?";
}

namespace {

bool all_pair_blocks(const Partition& p) {
  std::vector<int> sz(static_cast<size_t>(p.block_count()), 0);
  for (int i = 0; i < p.total_points(); ++i) ++sz[static_cast<size_t>(p.block_id(i))];
  return std::all_of(sz.begin(), sz.end(), [](int s) { return s == 2; });
}

bool unitary_pairs(const Partition& p) {
  if (!all_pair_blocks(p)) return false;
  std::vector<int> first(static_cast<size_t>(p.block_count()), -1);
  for (int i = 0; i < p.total_points(); ++i) {
    int& f = first[static_cast<size_t>(p.block_id(i))];
    if (f == -1) {
      f = i;
      continue;
    }
    const bool same_row = p.is_upper_point(f) == p.is_upper_point(i);
    if (same_row && p.color(f) == p.color(i)) return false;
    if (!same_row && p.color(f) != p.color(i)) return false;
  }
  return true;
}

// Per block: white minus black on the upper row congruent to the same count
// on the lower row (mod s; s == 0 means exact equality).
bool block_balance_mod(const Partition& p, int s) {
  std::vector<int> up(static_cast<size_t>(p.block_count()), 0);
  std::vector<int> low(static_cast<size_t>(p.block_count()), 0);
  for (int i = 0; i < p.total_points(); ++i) {
    const int d = p.color(i) == Color::White ? 1 : -1;
    if (p.is_upper_point(i))
      up[static_cast<size_t>(p.block_id(i))] += d;
    else
      low[static_cast<size_t>(p.block_id(i))] += d;
  }
  for (int b = 0; b < p.block_count(); ++b) {
    const int diff = up[static_cast<size_t>(b)] - low[static_cast<size_t>(b)];
    if (s == 0 ? diff != 0 : diff % s != 0) return false;
  }
  return true;
}

}  // namespace

bool oracle_member(const FamilyTag& tag, const Partition& p) {
  switch (tag.kind) {
    case FamilyKind::AllP: return true;
    case FamilyKind::AllNC: return is_noncrossing(p);
    case FamilyKind::Pairs: return is_noncrossing(p) && all_pair_blocks(p);
    case FamilyKind::Unitary: return is_noncrossing(p) && unitary_pairs(p);
    case FamilyKind::Cs: return is_noncrossing(p) && block_balance_mod(p, tag.s);
    case FamilyKind::Cinf: return is_noncrossing(p) && block_balance_mod(p, 0);
    case FamilyKind::C0plus:
      throw Error(Err::UnsupportedFamily, "c0plus has no closed-form membership test");
  }
  return false;
}

bool oracle_is_hereditary(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyKind::AllP:
    case FamilyKind::AllNC:
    case FamilyKind::Pairs:
    case FamilyKind::Unitary:
    case FamilyKind::Cs:
    case FamilyKind::Cinf:
      return true;  // the defining predicates are per-block
    case FamilyKind::C0plus:
      return false;
  }
  return false;
}

std::vector<Partition> family_generators(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyKind::AllNC: return {pi(2), theta(1)};
    case FamilyKind::Pairs: return {identity_strand(Color::White, Color::Black)};
    case FamilyKind::Unitary: return {};
    case FamilyKind::Cs: return {pi(2), theta(tag.s)};
    case FamilyKind::Cinf: return {pi(2)};
    case FamilyKind::C0plus: return {pi_zero_plus()};
    case FamilyKind::AllP: return {crossing_swap(), pi(2), theta(1)};
  }
  return {};
}

namespace {

struct Saturator {
  int bound;
  std::vector<Partition> all;
  PartitionSet seen;
  std::deque<size_t> work;
  // compose buckets: coloring word of the relevant row -> member indices
  std::unordered_map<std::string, std::vector<size_t>> by_upper, by_lower;

  explicit Saturator(int b) : bound(b) {}

  void add(const Partition& p) {
    if (p.total_points() > bound) return;
    if (!seen.insert(p).second) return;
    all.push_back(p);
    const size_t idx = all.size() - 1;
    by_upper[p.upper_word()].push_back(idx);
    by_lower[p.lower_word()].push_back(idx);
    work.push_back(idx);
  }

  void run() {
    while (!work.empty()) {
      const size_t i = work.front();
      work.pop_front();
      const Partition p = all[i];  // copy: `all` may reallocate

      add(adjoint(p));
      add(reverse(p));
      if (p.upper_len() > 0) {
        add(rotate(p, Corner::UpperLeftToLower));
        add(rotate(p, Corner::UpperRightToLower));
      }
      if (p.lower_len() > 0) {
        add(rotate(p, Corner::LowerLeftToUpper));
        add(rotate(p, Corner::LowerRightToUpper));
      }
      // tensors with everything small enough (both orders)
      const size_t frozen = all.size();
      for (size_t j = 0; j < frozen; ++j) {
        if (all[j].total_points() + p.total_points() > bound) continue;
        add(tensor(p, all[j]));
        add(tensor(all[j], p));
      }
      // compositions: p on top (bottom factors share p's lower word)...
      {
        auto it = by_upper.find(p.lower_word());
        if (it != by_upper.end()) {
          const auto idxs = it->second;
          for (size_t j : idxs) {
            const Partition& q = all[j];
            if (p.upper_len() + q.lower_len() > bound) continue;
            add(compose(q, p).partition);
          }
        }
      }
      // ...and p at the bottom
      {
        auto it = by_lower.find(p.upper_word());
        if (it != by_lower.end()) {
          const auto idxs = it->second;
          for (size_t j : idxs) {
            const Partition& t = all[j];
            if (t.upper_len() + p.lower_len() > bound) continue;
            add(compose(p, t).partition);
          }
        }
      }
    }
  }
};

void enumerate_colorings(int len, const std::function<void(const std::string&)>& f) {
  std::string w(static_cast<size_t>(len), 'w');
  for (int mask = 0; mask < (1 << len); ++mask) {
    for (int i = 0; i < len; ++i) w[static_cast<size_t>(i)] = (mask >> i & 1) ? 'b' : 'w';
    f(w);
  }
}

}  // namespace

Category Category::closure(CategorySpec spec, int hard_cap) {
  if (spec.bound > hard_cap)
    throw Error(Err::BoundExceeded, "closure bound " + std::to_string(spec.bound) +
                                        " exceeds hard cap " + std::to_string(hard_cap));
  for (const auto& g : spec.generators) {
    if (g.total_points() > spec.bound)
      throw Error(Err::BoundExceeded, "generator " + g.to_text() + " exceeds bound");
  }
  Saturator sat(spec.bound);
  sat.add(empty_partition());
  sat.add(white_identity());
  sat.add(black_identity());
  for (const auto& g : spec.generators) sat.add(g);
  sat.run();

  Category cat;
  cat.spec_ = std::move(spec);
  cat.table_ = PartitionSet(sat.seen.begin(), sat.seen.end());
  return cat;
}

Category Category::from_table(CategorySpec spec, PartitionSet members) {
  Category cat;
  cat.spec_ = std::move(spec);
  cat.table_ = std::move(members);
  return cat;
}

Category Category::from_family(const FamilyTag& tag, int bound) {
  if (tag.kind == FamilyKind::C0plus) {
    CategorySpec spec{family_generators(tag), bound, tag};
    return closure(std::move(spec));
  }
  Category cat;
  cat.spec_ = CategorySpec{family_generators(tag), bound, tag};
  return cat;
}

Membership Category::member(const Partition& p) const {
  if (oracle_backed()) return oracle_member(*spec_.oracle, p) ? Membership::Yes : Membership::NoWithinBound;
  if (p.total_points() > spec_.bound) return Membership::Unknown;
  return table_->count(p) ? Membership::Yes : Membership::NoWithinBound;
}

std::vector<Partition> Category::members_upto(int max_points) const {
  std::vector<Partition> out;
  const int cap = std::min(max_points, oracle_backed() ? max_points : spec_.bound);
  if (oracle_backed()) {
    const bool nc_only = spec_.oracle->kind != FamilyKind::AllP;
    for (int n = 0; n <= cap; ++n) {
      for (int k = 0; k <= n; ++k) {
        const int l = n - k;
        enumerate_colorings(k, [&](const std::string& up) {
          enumerate_colorings(l, [&](const std::string& low) {
            for (auto& p : enumerate_partitions(up, low, nc_only, cap))
              if (oracle_member(*spec_.oracle, p)) out.push_back(p);
          });
        });
      }
    }
  } else {
    for (const auto& p : *table_)
      if (p.total_points() <= cap) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> Category::members_with_colors(std::string_view upper,
                                                     std::string_view lower) const {
  std::vector<Partition> out;
  const int n = static_cast<int>(upper.size() + lower.size());
  if (oracle_backed()) {
    const bool nc_only = spec_.oracle->kind != FamilyKind::AllP;
    for (auto& p : enumerate_partitions(upper, lower, nc_only, n))
      if (oracle_member(*spec_.oracle, p)) out.push_back(p);
  } else {
    if (n > spec_.bound)
      throw Error(Err::BoundExceeded, "coloring exceeds table bound");
    for (const auto& p : *table_)
      if (p.upper_word() == upper && p.lower_word() == lower) out.push_back(p);
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<Partition> Category::projective_members(std::string_view word) const {
  std::vector<Partition> out;
  for (auto& p : members_with_colors(word, word)) {
    if (!is_noncrossing(p)) continue;
    if (adjoint(p) != p) continue;
    if (compose(p, p).partition != p) continue;
    out.push_back(p);
  }
  return out;
}

std::string Category::describe() const {
  std::ostringstream os;
  if (spec_.oracle) os << "family " << spec_.oracle->to_string();
  if (!spec_.oracle || !oracle_backed()) {
    os << (spec_.oracle ? " via " : "") << "closure of {";
    for (size_t i = 0; i < spec_.generators.size(); ++i) {
      if (i) os << ", ";
      os << spec_.generators[i].to_text();
    }
    os << "}";
  }
  os << ", bound " << spec_.bound;
  return os.str();
}

BlockStabilityReport is_block_stable(const Category& cat, int scan_points) {
  BlockStabilityReport rep;
  rep.scanned_points = scan_points > 0 ? scan_points : std::min(cat.bound(), 6);
  for (const auto& p : cat.members_upto(rep.scanned_points)) {
    for (const auto& b : blocks_of(p)) {
      if (cat.member(b) == Membership::NoWithinBound) {
        rep.verdict = Tri::No;
        rep.bad_member = p;
        rep.bad_block = b;
        return rep;
      }
    }
  }
  rep.scan_clean = true;
  if (cat.oracle() && oracle_is_hereditary(*cat.oracle()))
    rep.verdict = Tri::Yes;
  else
    rep.verdict = Tri::Unknown;
  return rep;
}

std::string cache_file_name(const CategorySpec& spec) {
  std::vector<std::string> gens;
  for (const auto& g : spec.generators) gens.push_back(g.to_text());
  std::sort(gens.begin(), gens.end());
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](char c) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  };
  for (const auto& g : gens) {
    for (char c : g) mix(c);
    mix(';');
  }
  mix('#');
  for (char c : std::to_string(spec.bound)) mix(c);
  std::ostringstream os;
  os << "table-" << std::hex << h << ".json";
  return os.str();
}

bool save_table(const Category& cat, const std::string& path) {
  if (!cat.table()) return false;
  nlohmann::ordered_json j;
  j["version"] = 1;
  std::vector<std::string> gens;
  for (const auto& g : cat.spec().generators) gens.push_back(g.to_text());
  std::sort(gens.begin(), gens.end());
  j["generators"] = gens;
  j["bound"] = cat.bound();
  std::vector<Partition> members(cat.table()->begin(), cat.table()->end());
  std::sort(members.begin(), members.end());
  std::vector<std::string> texts;
  texts.reserve(members.size());
  for (const auto& m : members) texts.push_back(m.to_text());
  j["members"] = texts;
  std::ofstream out(path);
  if (!out) return false;
  out << j.dump() << '\n';
  return out.good();
}

std::optional<Category> load_table(const CategorySpec& spec, const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("version").get<int>() != 1) return std::nullopt;
    if (j.at("bound").get<int>() != spec.bound) return std::nullopt;
    std::vector<std::string> gens;
    for (const auto& g : spec.generators) gens.push_back(g.to_text());
    std::sort(gens.begin(), gens.end());
    if (j.at("generators").get<std::vector<std::string>>() != gens) return std::nullopt;
    PartitionSet members;
    for (const auto& t : j.at("members")) members.insert(Partition::parse_text(t.get<std::string>()));
    return Category::from_table(spec, std::move(members));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ncpart
