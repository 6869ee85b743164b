#pragma once

#include <stdexcept>

#include "qdeg/tableaux.hpp"

namespace qdeg {

// Thrown by odd_psi3 when none of its case guards holds, or several hold
// with conflicting outputs. The composite map is only partially defined.
struct NotDefinedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagonal statistic of a letter: row - col if unmarked, col - row if
// marked. Unmarked letters have value <= 0, marked letters >= 1.
int diagonal_value(const Cell& cell, bool marked);

// Elementary dual equivalence on standard Young tableaux: if i sits
// between i-1 and i+1 in the row reading word the tableau is fixed,
// otherwise the two letters of {i-1,i,i+1} in extreme reading-word
// positions swap values. Requires 1 < i < n.
StandardYoungTableau deg_syt(const StandardYoungTableau& t, int i);

// Elementary dual equivalence on signed shifted tableaux, by the diagonal
// case analysis. With a <= b <= c the sorted diagonal values of the
// letters i-1, i, i+1:
//   (1) i on the median diagonal: fixed;
//   (2) a = b (resp. b = c): toggle the mark of the letter on diagonal c
//       (resp. a);
//   (3) ||a|-|c|| = 1: toggle the marks of the letters on diagonals a, c;
//   (4) otherwise: swap the absolute values on diagonals a and c, each
//       cell keeping its mark.
// Letters need not be contiguous (concatenation factors); the letters
// with absolute values i-1, i, i+1 must all be present.
SignedShiftedTableau deg_sst(const SignedShiftedTableau& s, int i);

// Which case (1)-(4) deg_sst takes. Exposed for the diagnostic that ties
// in case (2) only occur on the main diagonal.
int deg_sst_case(const SignedShiftedTableau& s, int i);

// Queer involution: toggle the mark on the entry of absolute value 2.
// Requires the letter 2 to be present (n >= 2 for standalone tableaux).
SignedShiftedTableau queer_sst(const SignedShiftedTableau& s);

// Dual equivalence on concatenated tableaux: fixed when i is between
// i-1 and i+1 in hook(left) hook(right); delegates to deg_sst when the
// three letters share a factor; otherwise swaps the absolute values of
// the two letters in extreme hook-word positions, marks staying put.
ConcatTableau deg_concat(const ConcatTableau& st, int i);

// Queer involution on concatenated tableaux: queer_sst on the factor
// containing both 1 and 2, or, when they sit in different factors (each
// then unmarked at its factor's origin), the values 1 and 2 swap.
ConcatTableau queer_concat(const ConcatTableau& st);

// Composite odd involution built from a queer pair (psi0, psi2):
//   psi0 psi2 (S)  if psi2 psi0 (S) = psi0 (S),
//   psi2 psi0 (S)  if psi0 psi2 (S) = psi0 (S),
//   S              if psi2 (S) = psi0 (S).
// Diagnostic only; not part of any graph construction.
template <class T, class F0, class F2>
T odd_psi3(F0&& psi0, F2&& psi2, const T& s) {
  const T p0 = psi0(s);
  const T p2 = psi2(s);
  bool out_set = false;
  T out{};
  auto propose = [&](const T& candidate) {
    if (out_set && !(out == candidate))
      throw NotDefinedError("odd_psi3: conflicting case guards");
    out = candidate;
    out_set = true;
  };
  if (psi2(p0) == p0) propose(psi0(p2));
  if (psi0(p2) == p0) propose(psi2(p0));
  if (p2 == p0) propose(s);
  if (!out_set) throw NotDefinedError("odd_psi3: no case guard holds");
  return out;
}

}  // namespace qdeg
