#include "pctrees/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "pctrees/error.hpp"

namespace pctrees {

namespace {

using nlohmann::json;

std::string lower_trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Accepts decimals and simple fractions such as "1/3".
std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_number(s.substr(0, slash));
    const auto den = parse_number(s.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
  }
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

// ---------------------------------------------------------------- JSON

struct Entry {
  std::size_t i;
  std::size_t j;
  const json* value;
  std::string where;
};

std::vector<Entry> read_entries(const json& doc, const char* key, std::size_t n, bool required) {
  std::vector<Entry> out;
  if (!doc.contains(key) || doc.at(key).is_null()) {
    if (required) throw ParseError(std::string("missing field '") + key + "'");
    return out;
  }
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& item = arr[k];
    const std::string where = std::string(key) + "[" + std::to_string(k) + "]";
    if (!item.is_object()) throw ParseError(where + ": expected an object {i, j, value}");
    for (const char* f : {"i", "j", "value"}) {
      if (!item.contains(f)) throw ParseError(where + ": missing field '" + f + "'");
    }
    if (!item.at("i").is_number_integer() || !item.at("j").is_number_integer()) {
      throw ParseError(where + ": 'i' and 'j' must be integers");
    }
    const auto i = item.at("i").get<long long>();
    const auto j = item.at("j").get<long long>();
    if (i < 1 || j < 1 || i > static_cast<long long>(n) || j > static_cast<long long>(n)) {
      throw ParseError(where + ": index out of range 1.." + std::to_string(n));
    }
    if (i >= j) throw ParseError(where + ": only upper-triangle entries (i < j) are accepted");
    const auto key_pair = std::make_pair(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    if (!seen.insert(key_pair).second) throw ParseError(where + ": duplicate entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (item.at("value").is_null()) continue;  // explicitly missing
    out.push_back({key_pair.first, key_pair.second, &item.at("value"), where + ".value"});
  }
  return out;
}

Tfn read_tfn(const json& v, const std::string& where) {
  if (v.is_number()) return Tfn::crisp(v.get<double>());
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
    throw ParseError(where + ": expected a number or a triangular fuzzy number [l, m, u]");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

double read_crisp(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

ConfidenceLevel read_label(const json& v, const std::string& where) {
  const auto level = find_confidence_level(v.get<std::string>());
  if (!level) throw ParseError(where + ": unknown confidence label '" + v.get<std::string>() + "'");
  return *level;
}

template <class T>
PairwiseMatrix<T> symmetric_matrix(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, T>>& upper) {
  PairwiseMatrix<T> m(n);
  for (const auto& [i, j, v] : upper) {
    m.set(i, j, v);
    m.set(j, i, v);
  }
  return m;
}

// ---------------------------------------------------------------- CSV

struct CsvCell {
  std::string text;
  std::size_t line;
};

std::vector<std::vector<std::vector<CsvCell>>> split_blocks(std::string_view text) {
  std::vector<std::vector<std::vector<CsvCell>>> blocks(1);
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (!t.empty() && t.front() == '#') continue;
    if (t.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    std::vector<CsvCell> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      row.push_back({std::string(trim(t.substr(start, comma - start))), line_no});
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    blocks.back().push_back(std::move(row));
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

bool is_missing_cell(const std::string& s) { return s.empty() || s == "*" || s == "-" || s == "?"; }

std::string cell_where(const CsvCell& c, std::size_t col) {
  return "line " + std::to_string(c.line) + ", column " + std::to_string(col + 1);
}

Tfn parse_tfn_cell(const CsvCell& c, std::size_t col) {
  std::vector<double> parts;
  std::size_t start = 0;
  const std::string_view s = c.text;
  while (true) {
    const auto semi = s.find(';', start);
    const auto v = parse_number(s.substr(start, semi - start));
    if (!v) throw ParseError(cell_where(c, col) + ": malformed fuzzy cell '" + c.text + "'");
    parts.push_back(*v);
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (parts.size() == 1) return Tfn::crisp(parts[0]);
  if (parts.size() != 3) throw ParseError(cell_where(c, col) + ": fuzzy cell needs 'l;m;u', got '" + c.text + "'");
  return {parts[0], parts[1], parts[2]};
}

void check_square(const std::vector<std::vector<CsvCell>>& block, const char* what) {
  const auto n = block.size();
  for (const auto& row : block) {
    if (row.size() != n) {
      throw ParseError("line " + std::to_string(row.front().line) + ": " + what + " row has " + std::to_string(row.size()) +
                       " cells, expected " + std::to_string(n));
    }
  }
  if (n < 2) throw ParseError(std::string(what) + " needs at least 2 rows");
}

}  // namespace

std::optional<ConfidenceLevel> find_confidence_level(std::string_view label) {
  const auto key = lower_trim(label);
  for (const auto& level : kConfidenceScale) {
    if (key == level.label) return level;
  }
  return std::nullopt;
}

std::string_view to_string(Mode mode) { return mode == Mode::kCrisp ? "crisp" : "fuzzy"; }

Problem parse_problem_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  if (!doc.contains("schema")) throw ParseError("missing field 'schema'");
  if (!doc.at("schema").is_number_integer() || doc.at("schema").get<int>() != 1) {
    throw ParseError("field 'schema': unsupported version (expected 1)");
  }
  if (!doc.contains("mode") || !doc.at("mode").is_string()) throw ParseError("field 'mode': expected \"crisp\" or \"fuzzy\"");
  const auto mode_text = doc.at("mode").get<std::string>();
  if (mode_text != "crisp" && mode_text != "fuzzy") throw ParseError("field 'mode': expected \"crisp\" or \"fuzzy\", got \"" + mode_text + "\"");
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) throw ParseError("field 'n': expected an integer");
  const auto n_raw = doc.at("n").get<long long>();
  if (n_raw < 2) throw ParseError("field 'n': at least 2 alternatives are required");
  const auto n = static_cast<std::size_t>(n_raw);

  const auto prefs = read_entries(doc, "preferences", n, true);
  const auto confs = read_entries(doc, "confidences", n, false);
  const bool has_conf = doc.contains("confidences") && !doc.at("confidences").is_null();

  if (mode_text == "crisp") {
    std::vector<std::tuple<std::size_t, std::size_t, double>> upper;
    for (const auto& e : prefs) upper.emplace_back(e.i, e.j, read_crisp(*e.value, e.where));
    CrispProblem p{make_reciprocal(n, upper), std::nullopt};
    if (has_conf) {
      std::vector<std::tuple<std::size_t, std::size_t, double>> cu;
      for (const auto& e : confs) {
        cu.emplace_back(e.i, e.j, e.value->is_string() ? read_label(*e.value, e.where).crisp : read_crisp(*e.value, e.where));
      }
      p.conf = symmetric_matrix(n, cu);
    }
    return p;
  }

  std::vector<std::tuple<std::size_t, std::size_t, Tfn>> upper;
  for (const auto& e : prefs) upper.emplace_back(e.i, e.j, read_tfn(*e.value, e.where));
  FuzzyProblem p{make_reciprocal(n, upper), std::nullopt};
  if (has_conf) {
    std::vector<std::tuple<std::size_t, std::size_t, Tfn>> cu;
    for (const auto& e : confs) {
      cu.emplace_back(e.i, e.j, e.value->is_string() ? read_label(*e.value, e.where).fuzzy : read_tfn(*e.value, e.where));
    }
    p.conf = symmetric_matrix(n, cu);
  }
  return p;
}

Problem parse_problem_csv(std::string_view text) {
  const auto blocks = split_blocks(text);
  if (blocks.empty()) throw ParseError("CSV problem is empty");
  if (blocks.size() > 2) throw ParseError("line " + std::to_string(blocks[2].front().front().line) + ": expected at most two matrices");
  const auto& pref = blocks[0];
  check_square(pref, "preference matrix");
  const auto n = pref.size();

  bool fuzzy = false;
  for (const auto& row : pref)
    for (const auto& c : row) fuzzy = fuzzy || c.text.find(';') != std::string::npos;

  const std::vector<std::vector<CsvCell>>* conf_block = nullptr;
  if (blocks.size() == 2) {
    conf_block = &blocks[1];
    check_square(*conf_block, "confidence matrix");
    if (conf_block->size() != n) throw ParseError("confidence matrix size differs from preference matrix size");
  }

  if (!fuzzy) {
    CrispProblem p{CrispPcm(n), std::nullopt};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& c = pref[i][j];
        if (is_missing_cell(c.text)) continue;
        const auto v = parse_number(c.text);
        if (!v) throw ParseError(cell_where(c, j) + ": malformed number '" + c.text + "'");
        p.pcm.set(i, j, *v);
      }
    }
    if (conf_block != nullptr) {
      CrispConfidence conf(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto& c = (*conf_block)[i][j];
          if (i == j || is_missing_cell(c.text)) continue;
          if (const auto level = find_confidence_level(c.text)) {
            conf.set(i, j, level->crisp);
          } else if (const auto v = parse_number(c.text)) {
            conf.set(i, j, *v);
          } else {
            throw ParseError(cell_where(c, j) + ": malformed confidence '" + c.text + "'");
          }
        }
      }
      p.conf = std::move(conf);
    }
    return p;
  }

  FuzzyProblem p{FuzzyPcm(n), std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = pref[i][j];
      if (is_missing_cell(c.text)) continue;
      p.pcm.set(i, j, parse_tfn_cell(c, j));
    }
  }
  if (conf_block != nullptr) {
    FuzzyConfidence conf(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& c = (*conf_block)[i][j];
        if (i == j || is_missing_cell(c.text)) continue;
        if (const auto level = find_confidence_level(c.text)) {
          conf.set(i, j, level->fuzzy);
        } else {
          conf.set(i, j, parse_tfn_cell(c, j));
        }
      }
    }
    p.conf = std::move(conf);
  }
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto ext = lower_trim(path.extension().string());
  try {
    return ext == ".csv" ? parse_problem_csv(buf.str()) : parse_problem_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace pctrees
