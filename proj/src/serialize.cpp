#include "qfgaps/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qfg {
namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer field '" + s + "'");
  return v;
}

std::int64_t to_i64(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer field '" + s + "'");
  return v;
}

// Rounded so the JSON writer's shortest form carries at most 15 digits.
double round15(double v) { return std::stod(format_real(v)); }

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string census_csv(const CensusRecord& rec) {
  std::ostringstream os;
  os << rec.set1.name() << ',' << rec.set2.name() << ',' << rec.a << ',' << rec.x << ',' << rec.len << ','
     << rec.count << '\n';
  for (std::uint64_t n : rec.witnesses) os << "W," << n << '\n';
  return os.str();
}

CensusRecord parse_census_csv(std::string_view text) {
  CensusRecord rec;
  bool have_summary = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty() || line == kCensusHeader) continue;
    const auto f = split_fields(line);
    if (f.size() == 2 && f[0] == "W") {
      rec.witnesses.push_back(to_u64(f[1]));
      continue;
    }
    if (f.size() != 6 || have_summary) throw std::invalid_argument("malformed census row");
    rec.set1 = SetId::parse(f[0]);
    rec.set2 = SetId::parse(f[1]);
    rec.a = to_i64(f[2]);
    rec.x = to_u64(f[3]);
    rec.len = to_u64(f[4]);
    rec.count = to_u64(f[5]);
    have_summary = true;
  }
  if (!have_summary) throw std::invalid_argument("census csv has no summary row");
  return rec;
}

std::string correlation_csv(const CorrelationReport& r) {
  std::ostringstream os;
  os << r.psi << ',' << r.a << ',' << r.x << ',' << r.J << ',' << format_real(r.main) << ',' << format_real(r.ratio);
  return os.str();
}

CorrelationReport parse_correlation_csv(std::string_view line) {
  const auto f = split_fields(line);
  if (f.size() != 6) throw std::invalid_argument("malformed correlation row");
  return {f[0], to_i64(f[1]), to_u64(f[2]), to_i64(f[3]), std::stod(f[4]), std::stod(f[5])};
}

nlohmann::ordered_json to_json(const CensusRecord& rec) {
  return {{"set1", rec.set1.name()}, {"set2", rec.set2.name()}, {"a", rec.a},         {"x", rec.x},
          {"H", rec.len},            {"count", rec.count},      {"witnesses", rec.witnesses}};
}

nlohmann::ordered_json to_json(const CorrelationReport& r) {
  return {{"psi", r.psi}, {"a", r.a}, {"x", r.x}, {"J", r.J}, {"main", round15(r.main)}, {"ratio", round15(r.ratio)}};
}

nlohmann::ordered_json to_json(const TruncatedValue& v) {
  return {{"value", round15(v.value)}, {"error_bound", round15(v.error_bound)}, {"terms_used", v.terms_used}};
}

nlohmann::ordered_json to_json(const GapWitness& w) {
  nlohmann::ordered_json params = std::visit(
      [](const auto& p) -> nlohmann::ordered_json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Sq2Params>) {
          return {{"s", p.s}, {"t", p.t}, {"c", p.c}};
        } else if constexpr (std::is_same_v<P, RepresentableParams>) {
          return {{"s", p.s}, {"norm_n", p.norm_n}, {"norm_m", p.norm_m}};
        } else if constexpr (std::is_same_v<P, GenericParams>) {
          return {{"l1", p.l1},    {"l2", p.l2},       {"Q", p.q},         {"Qstar", p.qstar},
                  {"E", round15(p.e)}, {"wstar", round15(p.wstar)}, {"vstar", p.vstar}};
        } else {
          return {{"steps", p.steps}};
        }
      },
      w.params);
  return {{"a", w.a},           {"x", w.x},       {"n", w.n}, {"offset", w.offset}, {"branch", branch_name(w.branch)},
          {"params", params}};
}

}  // namespace qfg
