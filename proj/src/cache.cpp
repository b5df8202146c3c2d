#include "polyzeta/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "polyzeta/error.hpp"
#include "polyzeta/report.hpp"

namespace polyzeta {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::default_dir() {
  if (const char* d = std::getenv("POLYZETA_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "polyzeta";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "polyzeta";
  return {};
}

fs::path Cache::entry_path(std::string_view entry) const { return dir_ / (std::string(entry) + ".jsonl"); }

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string id_entry(unsigned w) { return "identification-w" + std::to_string(w); }

std::string basis_entry(Alphabet a, BasisKind k, unsigned w) {
  return std::string("basis-") + alphabet_name(a) + "-" + basis_name(k) + "-w" + std::to_string(w);
}

constexpr std::string_view kFormat = "polyzeta-cache";

constexpr BasisKind kKinds[] = {BasisKind::P, BasisKind::S, BasisKind::Pi, BasisKind::Sigma};

}  // namespace

std::optional<std::string> Cache::read_entry(std::string_view entry) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(entry), std::ios::binary);
  if (!in) return std::nullopt;
  std::string head;
  if (!std::getline(in, head)) return std::nullopt;
  std::ostringstream rest;
  rest << in.rdbuf();
  std::string body = rest.str();
  json h = json::parse(head, nullptr, false);
  if (h.is_discarded() || !h.is_object()) return std::nullopt;
  if (h.value("format", "") != kFormat || h.value("version", -1) != kVersion || h.value("entry", "") != entry)
    return std::nullopt;
  if (h.value("checksum", "") != hex64(fnv1a64(body))) return std::nullopt;
  return body;
}

void Cache::write_entry(std::string_view entry, const std::string& body) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  json h = {{"format", kFormat}, {"version", kVersion}, {"entry", entry}, {"checksum", hex64(fnv1a64(body))}};
  std::random_device rd;
  fs::path final_path = entry_path(entry);
  fs::path tmp = final_path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << h.dump() << '\n' << body;
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
}

std::optional<Identification> Cache::load_identification(unsigned max_weight) const {
  auto body = read_entry(id_entry(max_weight));
  if (!body) return std::nullopt;
  try {
    std::istringstream in(*body);
    std::string line;
    std::optional<unsigned> weight;
    std::map<Alphabet, std::vector<Rule>> rules;
    std::map<Alphabet, std::vector<Symbol>> irr;
    Identification id;
    while (std::getline(in, line)) {
      json r = json::parse(line);
      const std::string type = r.at("type").get<std::string>();
      if (type == "meta") {
        weight = r.at("max_weight").get<unsigned>();
        continue;
      }
      if (type == "summary") {
        WeightSummary s;
        s.weight = r.at("weight").get<unsigned>();
        s.equations = r.at("equations").get<std::size_t>();
        s.unknowns_y = r.at("unknowns_y").get<std::size_t>();
        s.unknowns_x = r.at("unknowns_x").get<std::size_t>();
        s.relations_checked = r.at("relations_checked").get<std::size_t>();
        s.max_gamma_degree = r.at("max_gamma_degree").get<unsigned>();
        for (const json& x : r.at("new_irreducibles_y")) s.new_irreducibles_y.push_back(symbol_from_json(x));
        for (const json& x : r.at("new_irreducibles_x")) s.new_irreducibles_x.push_back(symbol_from_json(x));
        id.summaries.push_back(std::move(s));
        continue;
      }
      Alphabet side = parse_alphabet(r.at("side").get<std::string>());
      if (type == "rule") {
        rules[side].push_back(rule_from_json(r.at("rule")));
      } else if (type == "irreducible") {
        irr[side].push_back(symbol_from_json(r.at("symbol")));
      } else if (type == "value") {
        auto& m = side == Alphabet::Y ? id.in_y : id.in_x;
        m.insert_or_assign(symbol_from_json(r.at("symbol")), cpoly_from_json(r.at("value")));
      } else {
        return std::nullopt;
      }
    }
    if (weight != max_weight) return std::nullopt;
    id.max_weight = max_weight;
    id.y = RewriteSystem(Alphabet::Y, rules[Alphabet::Y], irr[Alphabet::Y], max_weight);
    id.x = RewriteSystem(Alphabet::X, rules[Alphabet::X], irr[Alphabet::X], max_weight);
    return id;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store_identification(const Identification& id) const {
  if (!enabled()) return;
  std::string body;
  auto add = [&](const json& j) { body += j.dump() + "\n"; };
  add({{"type", "meta"}, {"max_weight", id.max_weight}});
  for (const WeightSummary& s : id.summaries) {
    json ny = json::array(), nx = json::array();
    for (const Symbol& x : s.new_irreducibles_y) ny.push_back(to_json(x));
    for (const Symbol& x : s.new_irreducibles_x) nx.push_back(to_json(x));
    add({{"type", "summary"},
         {"weight", s.weight},
         {"equations", s.equations},
         {"unknowns_y", s.unknowns_y},
         {"unknowns_x", s.unknowns_x},
         {"relations_checked", s.relations_checked},
         {"max_gamma_degree", s.max_gamma_degree},
         {"new_irreducibles_y", ny},
         {"new_irreducibles_x", nx}});
  }
  for (Alphabet a : {Alphabet::Y, Alphabet::X}) {
    const std::string side(1, alphabet_name(a));
    for (const Rule& r : id.system(a).rules()) add({{"type", "rule"}, {"side", side}, {"rule", to_json(r)}});
    for (const Symbol& s : id.system(a).irreducibles()) add({{"type", "irreducible"}, {"side", side}, {"symbol", to_json(s)}});
    for (const auto& [s, v] : id.values(a)) add({{"type", "value"}, {"side", side}, {"symbol", to_json(s)}, {"value", to_json(v)}});
  }
  write_entry(id_entry(id.max_weight), body);
}

bool Cache::load_basis(Bases& bases, Alphabet a, BasisKind k, unsigned weight) const {
  auto body = read_entry(basis_entry(a, k, weight));
  if (!body) return false;
  try {
    std::map<Word, RationalPoly, GradedLess> entries;
    std::istringstream in(*body);
    std::string line;
    while (std::getline(in, line)) {
      json r = json::parse(line);
      Word w = word_from_json(a, r.at("word"));
      if (w.weight() != weight) return false;
      entries.insert_or_assign(w, rational_poly_from_json(a, r.at("value")));
    }
    if (entries.size() != words_of_weight(a, weight).size()) return false;
    bases.install(a, k, weight, std::move(entries));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void Cache::store_basis(const Bases& bases, Alphabet a, BasisKind k, unsigned weight) const {
  if (!enabled()) return;
  const BasisTable& t = bases.table(a, k);
  if (!t.complete_weights.count(weight)) return;
  std::string body;
  for (const auto& [w, p] : t.entries)
    if (w.weight() == weight) body += json({{"word", to_json(w)}, {"value", to_json(p)}}).dump() + "\n";
  write_entry(basis_entry(a, k, weight), body);
}

void Cache::prime(Bases& bases, unsigned max_weight) const {
  if (!enabled()) return;
  for (Alphabet a : {Alphabet::X, Alphabet::Y})
    for (BasisKind k : kKinds) {
      if (!basis_defined(a, k)) continue;
      for (unsigned w = 1; w <= max_weight; ++w)
        if (!bases.table(a, k).complete_weights.count(w)) load_basis(bases, a, k, w);
    }
}

void Cache::persist(const Bases& bases) const {
  if (!enabled()) return;
  for (Alphabet a : {Alphabet::X, Alphabet::Y})
    for (BasisKind k : kKinds) {
      if (!basis_defined(a, k)) continue;
      for (unsigned w : bases.table(a, k).complete_weights) {
        if (w == 0 || read_entry(basis_entry(a, k, w))) continue;
        store_basis(bases, a, k, w);
      }
    }
}

Identification Cache::identification(unsigned max_weight, Bases& bases) const {
  if (auto id = load_identification(max_weight)) return std::move(*id);
  Identification id = local_coordinate_identification(max_weight, bases);
  store_identification(id);
  return id;
}

}  // namespace polyzeta
