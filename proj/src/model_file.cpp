#include "gpea/model_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gpea {

ModelSyntaxError::ModelSyntaxError(std::size_t line, const std::string& what)
    : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t to_index(const std::string& word, std::size_t line) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || end != word.data() + word.size()) throw ModelSyntaxError(line, "not a number: " + word);
  return v;
}

}  // namespace

ParsedModel parse_table(const std::string& text) {
  std::istringstream in(text);
  std::optional<ParsedModel> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    if (!out) {
      if (words[0] != "gpea" || words.size() != 2) throw ModelSyntaxError(lineno, "expected header \"gpea <n>\"");
      const std::size_t n = to_index(words[1], lineno);
      if (n < 1 || n > kMaxElements) {
        throw ModelSyntaxError(lineno, "size must be between 1 and " + std::to_string(kMaxElements));
      }
      out.emplace(ParsedModel{SumTable(n), {}});
      continue;
    }
    const std::size_t n = out->table.size();
    if (words[0] == "labels") {
      if (!out->labels.empty()) throw ModelSyntaxError(lineno, "second labels line");
      if (words.size() != n + 1) throw ModelSyntaxError(lineno, "expected " + std::to_string(n) + " labels");
      out->labels.assign(words.begin() + 1, words.end());
    } else if (words[0] == "sum") {
      if (words.size() != 4) throw ModelSyntaxError(lineno, "expected \"sum <i> <j> <k>\"");
      Element v[3];
      for (int t = 0; t < 3; ++t) {
        const std::size_t x = to_index(words[t + 1], lineno);
        if (x >= n) throw ModelSyntaxError(lineno, "index out of range: " + words[t + 1]);
        v[t] = static_cast<Element>(x);
      }
      const auto old = out->table.get(v[0], v[1]);
      if (old && *old != v[2]) {
        throw ModelSyntaxError(lineno, "conflicting sum for " + words[1] + " " + words[2]);
      }
      out->table.set(v[0], v[1], v[2]);
    } else {
      throw ModelSyntaxError(lineno, "unknown directive: " + words[0]);
    }
  }
  if (!out) throw ModelSyntaxError(lineno, "missing header \"gpea <n>\"");
  out->table.fill_zero_sums();
  return std::move(*out);
}

FiniteGpea parse_model(const std::string& text) {
  ParsedModel p = parse_table(text);
  return FiniteGpea(p.table, std::move(p.labels));
}

std::string serialize_model(const FiniteGpea& e) {
  std::ostringstream out;
  out << "gpea " << e.size() << '\n';
  if (!e.labels().empty()) {
    out << "labels";
    for (const auto& l : e.labels()) out << ' ' << l;
    out << '\n';
  }
  for (Element a = 1; a < e.size(); ++a) {
    for (Element b = 1; b < e.size(); ++b) {
      if (auto s = e.oplus(a, b)) out << "sum " << +a << ' ' << +b << ' ' << +*s << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace gpea
