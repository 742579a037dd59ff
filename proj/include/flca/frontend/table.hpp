#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "../flca.hpp"
#include "value.hpp"

namespace flca::frontend {

enum class TableOp : std::uint8_t { Rhom, Hom, Tensor, Dtensor, K0mul };

inline std::string_view to_string(TableOp op) {
  switch (op) {
    case TableOp::Rhom: return "rhom";
    case TableOp::Hom: return "hom";
    case TableOp::Tensor: return "tensor";
    case TableOp::Dtensor: return "dtensor";
    case TableOp::K0mul: return "k0mul";
  }
  return "?";
}

inline std::optional<TableOp> parse_table_op(std::string_view s) {
  for (TableOp op : {TableOp::Rhom, TableOp::Hom, TableOp::Tensor, TableOp::Dtensor, TableOp::K0mul})
    if (to_string(op) == s) return op;
  return std::nullopt;
}

// Every global atom plus, per prime, Z/p^n for each exponent, Z_p, Q_p and
// Q_p/Z_p; sorted in canonical atom order. Afin is optional because it is
// not a row of the reference table.
inline std::vector<Atom> table_atoms(const std::vector<std::uint64_t>& primes,
                                     const std::vector<std::uint32_t>& exps, bool with_afin) {
  std::vector<Atom> atoms;
  for (Family f : kAllFamilies) {
    if (is_local(f) || (f == Family::FinAdele && !with_afin)) continue;
    atoms.push_back(Atom::global(f));
  }
  for (std::uint64_t pv : primes) {
    const Prime p(pv);
    for (std::uint32_t n : exps) atoms.push_back(Atom::cyclic(p, n));
    atoms.push_back(Atom::p_adic_integers(p));
    atoms.push_back(Atom::p_adic_numbers(p));
    atoms.push_back(Atom::pruefer(p));
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

inline std::string table_cell(TableOp op, const Atom& a, const Atom& b) {
  switch (op) {
    case TableOp::Rhom: return to_string(atom_rhom(a, b));
    case TableOp::Hom: return to_string(hom(a, b));
    case TableOp::Tensor: return to_string(tensor(a, b));
    case TableOp::Dtensor: return to_string(derived_tensor(FlcaGroup(a), FlcaGroup(b)));
    case TableOp::K0mul: return to_string(mul(k0_of(a), k0_of(b)));
  }
  return "?";
}

struct Table {
  TableOp op;
  std::vector<Atom> atoms;
  std::vector<std::vector<std::string>> cells;  // cells[row][col]
};

inline Table make_table(TableOp op, const std::vector<Atom>& atoms) {
  Table t{op, atoms, {}};
  for (const Atom& a : atoms) {
    std::vector<std::string> row;
    for (const Atom& b : atoms) row.push_back(table_cell(op, a, b));
    t.cells.push_back(std::move(row));
  }
  return t;
}

// Header row and column hold atom serializations; the corner holds the op name.
inline std::string to_tsv(const Table& t) {
  std::string s(to_string(t.op));
  for (const Atom& b : t.atoms) s += "\t" + to_string(b);
  s += "\n";
  for (std::size_t i = 0; i < t.atoms.size(); ++i) {
    s += to_string(t.atoms[i]);
    for (const auto& c : t.cells[i]) s += "\t" + c;
    s += "\n";
  }
  return s;
}

inline Json to_json(const Table& t) {
  Json atoms = Json::array();
  for (const Atom& a : t.atoms) atoms.push_back(to_string(a));
  return Json{{"op", std::string(to_string(t.op))}, {"atoms", atoms}, {"cells", t.cells}};
}

}  // namespace flca::frontend
