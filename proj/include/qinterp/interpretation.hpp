#pragma once

#include <optional>
#include <string>

#include "qinterp/predicates.hpp"

namespace qinterp {

// A codesame-class of cofinal bumps: the interpreted copy of Q. The stored
// representative is the canonical parity +1 bump with support (q, inf).
struct CodedRational {
  PLMap representative;
  Rat endpoint;

  bool operator==(const CodedRational& o) const { return endpoint == o.endpoint; }
};

CodedRational encode(const Rat& q);
Rat decode(const PLMap& f);  // pre: cofinal bump; returns the support endpoint

// Class of the conjugate f . rep . f^-1; endpoint moves to f(endpoint).
CodedRational group_act(const PLMap& f, const CodedRational& c);  // pre: automorphism
CodedRational monoid_act(const PLMap& f, const CodedRational& c); // pre: injective
CodedRational epi_act(const PLMap& f, const CodedRational& c);    // pre: surjective
CodedRational endo_act(const PLMap& h, const CodedRational& c);   // total

struct BetweenResult {
  bool holds = false;
  // Automorphism witnessing the strict chain: t(q) = r and t(r) = s.
  std::optional<PLMap> witness;
};

// Linear betweenness q <= r <= s or s <= r <= q of the encoded endpoints.
BetweenResult linear_between(const CodedRational& c1, const CodedRational& c2,
                             const CodedRational& c3);

// One-point action check on an embedding: with g, h cofinal bumps on the
// same side encoding q and r, the verdict holds exactly when f tears at q,
// the tear is a maximal image gap reaching f(q), and r = f(q). On success
// carries the witnesses: the transported map h' with f o g = h' o f, and the
// gap bump k on the tear.
struct Act1Result {
  bool holds = false;
  std::string reason;       // set when !holds
  std::optional<PLMap> transported;  // h'
  std::optional<PLMap> gap_bump;     // k
};

Act1Result act1_check(const PLMap& f, const PLMap& g, const PLMap& h);

// Witnesses for the embedding action: f2 inserts a gap at f(q), f1 = f2 o f,
// k encodes f1(q); both one-point checks hold by construction.
struct Act2Witness {
  PLMap f1, f2, k;
  Act1Result check_f1;  // act1(f1, g, k)
  Act1Result check_f2;  // act1(f2, h, k)
};

Act2Witness act2_witness(const PLMap& f, const PLMap& g, const PLMap& h);

// Epimorphism action via a pinned right inverse f' with f'(r) = q.
struct Act3Witness {
  PLMap right_inv;  // f'
  Act2Witness inner;  // act2 witnesses for (f', h, g)
};

Act3Witness act3_witness(const PLMap& f, const PLMap& g, const PLMap& h);

// Endomorphism action through the epi-embedding factorization h = g1 o f2.
struct Act4Witness {
  Factorization split;  // h = split.epi o split.emb
  PLMap mid;            // cofinal bump encoding split.emb(q)
  Act3Witness epi_part;
  Act2Witness emb_part;
};

Act4Witness act4_witness(const PLMap& h, const PLMap& g, const PLMap& k);

// Cofinal bump with support on the chosen side of q, parity +1.
PLMap cofinal_bump(const Rat& q, bool left_side);

}  // namespace qinterp
