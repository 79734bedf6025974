#include "algmono/document.hpp"

#include <cctype>
#include <sstream>

namespace algmono {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

long parse_long(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  if (text == "none") return Scenario::None;
  if (text == "mapping-torus" || text == "bundle") return Scenario::MappingTorus;
  if (text == "fibered-link") return Scenario::FiberedLink;
  if (text == "base-localization") return Scenario::BaseLocalization;
  if (text == "fibration") return Scenario::Fibration;
  if (text == "closed-3-manifold") return Scenario::ClosedThreeManifold;
  if (text == "composite") return Scenario::Composite;
  throw std::invalid_argument("unknown scenario '" + text + "'");
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::None: return "none";
    case Scenario::MappingTorus: return "mapping-torus";
    case Scenario::FiberedLink: return "fibered-link";
    case Scenario::BaseLocalization: return "base-localization";
    case Scenario::Fibration: return "fibration";
    case Scenario::ClosedThreeManifold: return "closed-3-manifold";
    case Scenario::Composite: return "composite";
  }
  return "none";
}

InputDocument parse_document(const std::string& text, std::size_t first_line) {
  InputDocument doc;
  doc.first_line = first_line;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = first_line - 1;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    s = trim(s);
    if (s.empty()) continue;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(line, "expected 'key: value', got '" + s + "'");
    std::string key = trim(s.substr(0, colon));
    std::string value = trim(s.substr(colon + 1));
    auto once = [&](bool present) {
      if (present) throw ParseError(line, "duplicate '" + key + ":' line");
    };
    try {
      if (key == "name") {
        doc.name = value;
      } else if (key == "gens") {
        once(doc.gens.has_value());
        auto names = tokens(value);
        if (names.empty()) throw ParseError(line, "'gens:' needs at least one generator");
        doc.gens = Located<std::vector<std::string>>{names, line};
      } else if (key == "rel") {
        doc.rels.push_back({value, line});
      } else if (key == "rels") {
        for (const auto& r : split(value, ';'))
          if (!r.empty()) doc.rels.push_back({r, line});
      } else if (key == "nu") {
        once(doc.nu.has_value());
        doc.nu = Located<std::string>{value, line};
      } else if (key == "field") {
        doc.field = FieldSpec::parse(value);
      } else if (key == "matrix") {
        once(doc.matrix.has_value());
        doc.matrix = Located<std::string>{value, line};
      } else if (key == "lambda") {
        once(doc.lambda.has_value());
        doc.lambda = Located<std::string>{value, line};
      } else if (key == "scenario") {
        doc.scenario = parse_scenario(value);
      } else if (key == "attest") {
        auto parts = tokens(value);
        if (parts.empty()) throw ParseError(line, "'attest:' needs a hypothesis name");
        std::string justification = trim(value.substr(value.find(parts[0]) + parts[0].size()));
        doc.attest[parts[0]] = justification;
      } else if (key == "space") {
        doc.space = value;
      } else if (key == "b1M") {
        once(doc.b1_total.has_value());
        doc.b1_total = Located<long>{parse_long(value, line), line};
      } else if (key == "map") {
        auto arrow = value.find("->");
        if (arrow == std::string::npos) throw ParseError(line, "expected 'map: x -> word'");
        doc.maps.push_back({{trim(value.substr(0, arrow)), trim(value.substr(arrow + 2))}, line});
      } else if (key == "expect") {
        for (const auto& kv : tokens(value)) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) throw ParseError(line, "expected key=value in 'expect:', got '" + kv + "'");
          doc.expect[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
      } else if (key == "origin") {
        doc.origin = value;
      } else if (key == "tags") {
        doc.tags = tokens(value);
      } else {
        throw ParseError(line, "unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
  }
  return doc;
}

void require_single_form(const InputDocument& doc) {
  if (doc.has_presentation() && doc.has_matrix())
    throw ParseError(doc.matrix->line, "document has both a presentation and a matrix");
  if (!doc.has_presentation() && !doc.has_matrix())
    throw ParseError(doc.first_line, "document has neither 'gens:' nor 'matrix:'");
  if (doc.has_matrix() && !doc.rels.empty()) throw ParseError(doc.rels.front().line, "relators given without 'gens:'");
  if (doc.has_matrix() && doc.nu) throw ParseError(doc.nu->line, "'nu:' given without 'gens:'");
}

Presentation presentation_of(const InputDocument& doc, std::vector<std::string>* warnings) {
  if (!doc.gens) throw ParseError(doc.first_line, "missing 'gens:' line");
  Presentation gens_only;
  try {
    gens_only = Presentation(doc.gens->value, {});
  } catch (const std::exception& e) {
    throw ParseError(doc.gens->line, e.what());
  }
  std::vector<Word> relators;
  for (const auto& r : doc.rels) {
    try {
      relators.push_back(gens_only.parse_word(r.value));
    } catch (const std::exception& e) {
      throw ParseError(r.line, e.what());
    }
  }
  return Presentation(doc.gens->value, std::move(relators), warnings);
}

ZMap zmap_of(const InputDocument& doc, const Presentation& p) {
  if (!doc.nu) throw ParseError(doc.first_line, "missing 'nu:' line");
  const std::size_t line = doc.nu->line;
  auto toks = tokens(doc.nu->value);
  ZMap nu;
  nu.values.assign(p.num_generators(), 0);
  bool named = !toks.empty() && toks[0].find('=') != std::string::npos;
  if (!named) {
    if (toks.size() != p.num_generators())
      throw ParseError(line, "expected " + std::to_string(p.num_generators()) + " values, got " + std::to_string(toks.size()));
    for (std::size_t i = 0; i < toks.size(); ++i) nu.values[i] = parse_long(toks[i], line);
    return nu;
  }
  std::vector<bool> seen(p.num_generators(), false);
  for (const auto& t : toks) {
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected name=value, got '" + t + "'");
    std::size_t idx = 0;
    try {
      idx = p.index_of(t.substr(0, eq));
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
    if (seen[idx]) throw ParseError(line, "generator '" + t.substr(0, eq) + "' assigned twice");
    seen[idx] = true;
    nu.values[idx] = parse_long(t.substr(eq + 1), line);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError(line, "no value for generator '" + p.generator_names()[i] + "'");
  return nu;
}

KMatrix rational_matrix_of(const InputDocument& doc) {
  if (!doc.matrix) throw ParseError(doc.first_line, "missing 'matrix:' line");
  const std::size_t line = doc.matrix->line;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : split(doc.matrix->value, ';')) {
    std::vector<Scalar> row;
    for (const auto& t : tokens(r)) {
      try {
        row.push_back(Scalar::parse(t, doc.field));
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
    }
    if (row.empty()) throw ParseError(line, "empty matrix row");
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError(line, "ragged matrix rows");
    rows.push_back(std::move(row));
  }
  KMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), Scalar::in(doc.field, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix integer_matrix_of(const InputDocument& doc) {
  if (!doc.matrix) throw ParseError(doc.first_line, "missing 'matrix:' line");
  const std::size_t line = doc.matrix->line;
  std::vector<std::vector<long>> rows;
  for (const auto& r : split(doc.matrix->value, ';')) {
    std::vector<long> row;
    for (const auto& t : tokens(r)) row.push_back(parse_long(t, line));
    if (row.empty()) throw ParseError(line, "empty matrix row");
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError(line, "ragged matrix rows");
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), 0L);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Scalar lambda_of(const InputDocument& doc) {
  if (!doc.lambda) return Scalar::in(doc.field, 1);
  try {
    return Scalar::parse(doc.lambda->value, doc.field);
  } catch (const std::exception& e) {
    throw ParseError(doc.lambda->line, e.what());
  }
}

std::vector<Word> automorphism_images_of(const InputDocument& doc, const Presentation& base) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < base.num_generators(); ++i) images.push_back(Word({{i, 1}}));
  std::vector<bool> seen(base.num_generators(), false);
  for (const auto& m : doc.maps) {
    try {
      std::size_t idx = base.index_of(m.value.first);
      if (seen[idx]) throw std::invalid_argument("generator '" + m.value.first + "' mapped twice");
      seen[idx] = true;
      images[idx] = base.parse_word(m.value.second);
    } catch (const std::exception& e) {
      throw ParseError(m.line, e.what());
    }
  }
  return images;
}

std::string format_document(const Presentation& p, const ZMap* nu, FieldSpec field,
                            const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "gens:";
  for (const auto& n : p.generator_names()) os << ' ' << n;
  os << '\n';
  for (const auto& r : p.relators()) os << "rel: " << p.format_word(r) << '\n';
  if (nu) {
    os << "nu:";
    for (std::size_t i = 0; i < p.num_generators(); ++i) os << ' ' << p.generator_names()[i] << '=' << nu->values[i];
    os << '\n';
  }
  if (!field.is_rational()) os << "field: " << field.name() << '\n';
  return os.str();
}

std::vector<InputDocument> parse_corpus(const std::string& text) {
  std::vector<InputDocument> out;
  std::istringstream in(text);
  std::string raw, body, name;
  std::size_t line = 0, body_start = 1;
  bool open = false;
  auto flush = [&]() {
    if (!open) return;
    InputDocument doc = parse_document(body, body_start);
    doc.name = name;
    require_single_form(doc);
    out.push_back(std::move(doc));
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.rfind("[entry", 0) == 0) {
      if (s.back() != ']') throw ParseError(line, "malformed entry header");
      flush();
      name = trim(s.substr(6, s.size() - 7));
      if (name.empty()) throw ParseError(line, "entry without a name");
      body.clear();
      body_start = line + 1;
      open = true;
      continue;
    }
    if (!open) {
      std::string t = s;
      if (auto hash = t.find('#'); hash != std::string::npos) t.erase(hash);
      if (!trim(t).empty()) throw ParseError(line, "content before the first [entry] header");
      continue;
    }
    body += raw + '\n';
  }
  flush();
  return out;
}

}  // namespace algmono
