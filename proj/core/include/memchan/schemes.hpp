// Copyright 2026 The memchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/linalg.hpp"

namespace memchan {

enum class SchemeKind {
  kProductX,
  kProductY,
  kProductZ,
  kBell,
  kEntanglementAssisted,  // "at": two pre-shared Bell pairs
  kSemiQuantum1,          // "sq1": 16-state family, two uses
  kSemiQuantum2,          // "sq2": 64-state family, four uses
};

inline constexpr SchemeKind kAllSchemes[] = {
    SchemeKind::kProductX,     SchemeKind::kProductY,
    SchemeKind::kProductZ,     SchemeKind::kBell,
    SchemeKind::kEntanglementAssisted, SchemeKind::kSemiQuantum1,
    SchemeKind::kSemiQuantum2,
};

/// CLI spelling: product-x, product-y, product-z, bell, at, sq1, sq2.
std::string_view to_string(SchemeKind kind);
SchemeKind parse_scheme(std::string_view name);

struct CodingScheme {
  SchemeKind kind;
  int channel_uses;  // 2, or 4 for sq2
  int payload_bits;  // log2 of the number of distinguishable codewords
};

CodingScheme scheme_info(SchemeKind kind);

struct SchemeStateSet {
  PureState representative;
  int qubit_count;
  std::vector<int> touched_qubits;  // 1-based, in channel-use order
};

// Bell states in this library's labelling:
//   |Psi+-> = (|00> +- |11>)/sqrt2,  |Phi+-> = (|01> +- |10>)/sqrt2.
// Note that this swaps the more common Psi/Phi naming.
enum class BellLabel { kPsiPlus = 0, kPsiMinus = 1, kPhiPlus = 2, kPhiMinus = 3 };

PureState bell_state(BellLabel label);

/// Product codeword |j k> in the x, y or z basis (kind must be a product
/// scheme), with |l>_x = (|0> + (-1)^l |1>)/sqrt2 and
/// |l>_y = (|0> + i (-1)^l |1>)/sqrt2.
PureState product_state(SchemeKind basis, int j, int k);

/// Member `index` (1..16) of the four-qubit semi-quantum family; qubits 1-2
/// are the sender's Bell pair, 3-4 the receiver's.
PureState sq1_state(int index);

/// Member (m, i), m in 1..16, i in 0..3, of the 64-state eight-qubit
/// semi-quantum family. Bell pairs occupy qubits (1,2), (3,4), (5,6), (7,8);
/// the sender holds qubits 1-4.
PureState sq2_state(int m, int i);

/// The single codeword whose channel image fixes the scheme's information,
/// together with the qubits that traverse the channel.
SchemeStateSet build_representative(SchemeKind kind);

/// Eigenvalues from the closed-form expressions, multiplicities expanded, in
/// formula order (unsorted). Zeros beyond the listed values are omitted.
std::vector<double> closed_form_eigenvalues(SchemeKind kind,
                                            const PauliProbs& probs, double mu);

Spectrum closed_form_spectrum(SchemeKind kind, const PauliProbs& probs,
                              double mu);

/// payload_bits - S(closed-form spectrum), in bits.
double mutual_information_total(SchemeKind kind, const PauliProbs& probs,
                                double mu);

/// Total information divided by the number of channel uses.
double normalized_information(SchemeKind kind, const PauliProbs& probs,
                              double mu);

}  // namespace memchan
