#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flca/frontend/table.hpp"
#include "flca/group.hpp"

namespace flca::test {

// Atoms at p in {2,3,5}, n in {1,2}, including Afin.
inline std::vector<Atom> atoms_235() { return frontend::table_atoms({2, 3, 5}, {1, 2}, true); }

inline std::vector<Atom> atoms_23() { return frontend::table_atoms({2, 3}, {1, 2}, true); }

inline FlcaGroup random_group(std::mt19937_64& rng, int max_terms = 4) {
  static const std::vector<Atom> pool = frontend::table_atoms({2, 3, 5, 7}, {1, 2, 3}, true);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::uint64_t> mult(1, 3);
  FlcaGroup x;
  for (int i = terms(rng); i > 0; --i) x += FlcaGroup(pool[pick(rng)], mult(rng));
  return x;
}

struct GoldenTable {
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<std::string>> cells;
};

inline std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t i = s.find(from); i != std::string::npos; i = s.find(from, i + to.size())) s.replace(i, from.size(), to);
  return s;
}

// Substitutes the placeholders Q_p/Z_p, Z/p^n, Z_p, Q_p in that order.
inline std::string instantiate(std::string s, std::uint64_t p, std::uint32_t n) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  const std::string ps = std::to_string(p);
  s = replace_all(s, "Q_p/Z_p", "Q_" + ps + "/Z_" + ps);
  s = replace_all(s, "Z/p^n", "Z/" + std::to_string(q));
  s = replace_all(s, "Z_p", "Z_" + ps);
  return replace_all(s, "Q_p", "Q_" + ps);
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, '\t')) out.push_back(cell);
  return out;
}

// Reads the hand-transcribed template and instantiates it at (p, n).
inline GoldenTable load_golden(const std::string& path, std::uint64_t p, std::uint32_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  GoldenTable t;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(instantiate(line, p, n));
    if (header) {
      t.columns.assign(fields.begin() + 1, fields.end());
      header = false;
      continue;
    }
    t.rows.push_back(fields.front());
    t.cells.emplace_back(fields.begin() + 1, fields.end());
  }
  return t;
}

}  // namespace flca::test
