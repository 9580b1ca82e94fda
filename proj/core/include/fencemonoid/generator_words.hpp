#pragma once

#include "fencemonoid/enumerate.hpp"
#include "fencemonoid/word.hpp"

namespace fencemonoid {

struct GWord {
  Word word;
  // True when the word came from the closed-form identities below, false
  // when it is the stored breadth-first word of the closure of G.
  bool from_identity_table = false;
};

// A word over G for an element of IF_n, n even. The identities tried first:
//
//   eps:i       = gam:i gam:i (even i >= 4), del:i del:i (odd i <= n-3),
//                 sig1 sig2 (i = 2), sig2 sig1 (i = n-1)
//   id|_Y       = the eps words of the missing points, ascending
//   1->a shift  = del:a+1 sig1 del:a-1 (a < n), sig1 (a = n)
//   its inverse = del:a-1 sig2 del:a+1, sig2
//   beta:i,j    = del:i del:n-j+i+1 del:i (odd), gam:j gam:j-i gam:j (even)
//
// Each identity is used only when all its indices name members of G and the
// word evaluates to the target; otherwise `closure_of_g` supplies its word.
// Throws OddAmbient, or NotMember if the target is not in the table.
GWord g_word_for(int n, const PartialInjection& target, const SemigroupTable& closure_of_g);

// closure(set_G(n)) with generator words.
SemigroupTable closure_of_g(int n, unsigned threads = 1);

}  // namespace fencemonoid
