// Text formats: quiver files, dimension/weight vectors, conjugacy class
// files, and quadruple files. Parse failures throw parse_error; semantic
// violations surface as std::invalid_argument from the library layer.
//
// Quiver file:        vertices: v1 v2 ...
//                     arrow tail head        (one line per arrow)
// Class file:         eig p/q : b1 b2 ...    (one line per eigenvalue)
// Quadruple file:     blocks: a1 ... ar
//                     mult: followed by r rows of r counts
//                     omega: followed by d rows of d rationals
//                     zeta: z1 ... zr
// Vectors on the command line are comma- or whitespace-separated, rationals
// written p/q or as integer literals. Blank lines and #-comments are skipped.
#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nquiver/bimodule.hpp"
#include "nquiver/kp.hpp"
#include "nquiver/quiver.hpp"

namespace nquiver {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace ioutil {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!tokens(line).empty()) return true;
  }
  return false;
}

inline std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected an integer, got '" + s + "'");
  }
}

}  // namespace ioutil

inline Quiver parse_quiver(std::istream& in) {
  std::string line;
  if (!ioutil::next_content_line(in, line)) throw parse_error("quiver file: empty input");
  auto toks = ioutil::tokens(line);
  if (toks.empty() || toks[0] != "vertices:")
    throw parse_error("quiver file: expected a 'vertices:' header line");
  std::vector<std::string> names(toks.begin() + 1, toks.end());
  if (names.empty()) throw parse_error("quiver file: no vertices listed");
  std::vector<std::pair<std::string, std::string>> raw;
  while (ioutil::next_content_line(in, line)) {
    toks = ioutil::tokens(line);
    if (toks.size() != 3 || toks[0] != "arrow")
      throw parse_error("quiver file: expected 'arrow tail head', got '" + line + "'");
    raw.emplace_back(toks[1], toks[2]);
  }
  Quiver name_lookup(names, {});
  std::vector<std::pair<int, int>> arrows;
  for (auto& [t, h] : raw) {
    try {
      arrows.emplace_back(name_lookup.index_of(t), name_lookup.index_of(h));
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string("quiver file: ") + e.what());
    }
  }
  return Quiver(names, arrows);
}

inline std::vector<std::string> split_vector_text(const std::string& text) {
  std::string spaced = text;
  for (auto& c : spaced)
    if (c == ',') c = ' ';
  return ioutil::tokens(spaced);
}

// Length mismatches are domain errors (a violated precondition), not parse
// errors: the literal itself is well formed.
inline IntVec parse_int_vector(const std::string& text, int expected = -1) {
  IntVec out;
  for (const auto& t : split_vector_text(text)) out.push_back(ioutil::parse_int(t));
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw std::invalid_argument("vector '" + text + "' should have " + std::to_string(expected) +
                                " entries, one per vertex");
  return out;
}

inline Weight parse_weight_vector(const std::string& text, int expected = -1) {
  Weight out;
  for (const auto& t : split_vector_text(text)) {
    try {
      out.push_back(parse_rational(t));
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  }
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw std::invalid_argument("weight '" + text + "' should have " + std::to_string(expected) +
                                " entries, one per vertex");
  return out;
}

inline ConjugacyClass parse_class(std::istream& in) {
  ConjugacyClass c;
  std::string line;
  while (ioutil::next_content_line(in, line)) {
    auto toks = ioutil::tokens(line);
    if (toks.size() < 4 || toks[0] != "eig" || toks[2] != ":")
      throw parse_error("class file: expected 'eig p/q : b1 b2 ...', got '" + line + "'");
    ClassEntry e;
    try {
      e.eigenvalue = parse_rational(toks[1]);
    } catch (const std::invalid_argument& err) {
      throw parse_error(err.what());
    }
    for (std::size_t k = 3; k < toks.size(); ++k) e.partition.push_back(ioutil::parse_int(toks[k]));
    c.entries.push_back(std::move(e));
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("class file: ") + e.what());
  }
  return c;
}

inline Quadruple parse_quadruple(std::istream& in) {
  std::string line;
  if (!ioutil::next_content_line(in, line)) throw parse_error("quadruple file: empty input");
  auto toks = ioutil::tokens(line);
  if (toks.size() < 2 || toks[0] != "blocks:")
    throw parse_error("quadruple file: expected 'blocks: a1 ...'");
  SemisimpleAlgebra alg;
  for (std::size_t k = 1; k < toks.size(); ++k)
    alg.blocks.push_back(static_cast<int>(ioutil::parse_int(toks[k])));
  const int r = alg.num_blocks();

  if (!ioutil::next_content_line(in, line) || ioutil::tokens(line)[0] != "mult:")
    throw parse_error("quadruple file: expected 'mult:'");
  std::vector<std::vector<int>> mult;
  for (int i = 0; i < r; ++i) {
    if (!ioutil::next_content_line(in, line))
      throw parse_error("quadruple file: multiplicity matrix ended early");
    auto row = ioutil::tokens(line);
    if (static_cast<int>(row.size()) != r)
      throw parse_error("quadruple file: multiplicity row has wrong length");
    std::vector<int> m;
    for (auto& t : row) m.push_back(static_cast<int>(ioutil::parse_int(t)));
    mult.push_back(std::move(m));
  }
  Bimodule mod;
  try {
    mod = Bimodule(alg, mult);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("quadruple file: ") + e.what());
  }

  if (!ioutil::next_content_line(in, line) || ioutil::tokens(line)[0] != "omega:")
    throw parse_error("quadruple file: expected 'omega:'");
  const int d = mod.dim();
  RatMat g(d, d);
  for (int i = 0; i < d; ++i) {
    if (!ioutil::next_content_line(in, line))
      throw parse_error("quadruple file: omega matrix ended early");
    auto row = ioutil::tokens(line);
    if (static_cast<int>(row.size()) != d)
      throw parse_error("quadruple file: omega row has wrong length (want " + std::to_string(d) +
                        ")");
    for (int j = 0; j < d; ++j) {
      try {
        g(i, j) = parse_rational(row[j]);
      } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
      }
    }
  }

  if (!ioutil::next_content_line(in, line))
    throw parse_error("quadruple file: expected 'zeta:'");
  toks = ioutil::tokens(line);
  if (toks.empty() || toks[0] != "zeta:" || static_cast<int>(toks.size()) != r + 1)
    throw parse_error("quadruple file: expected 'zeta: z1 ... zr'");
  TraceFunction zeta;
  for (int k = 1; k <= r; ++k) {
    try {
      zeta.block_scalars.push_back(parse_rational(toks[k]));
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  }
  return Quadruple{std::move(alg), std::move(mod), std::move(g), std::move(zeta)};
}

inline std::string format_int_vector(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string format_weight(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s;
}

}  // namespace nquiver
