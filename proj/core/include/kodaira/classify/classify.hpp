#pragma once

#include "kodaira/group/group.hpp"
#include "kodaira/realstruct/realstruct.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kodaira {

enum class EllipticCase { A1, A2, B };
std::string to_string(EllipticCase e);

enum class CaseLabel {
    B1p, B1pp, B2,
    A1aip, A1aipp, A1aiip, A1aiipp,
    A1bip, A1bipp, A1biip, A1biipp,
    A1_2,
    A2aip, A2aipp, A2aiip, A2aiipp,
    A2_2i, A2_2ii,
};

// Catalog order: the order of the published case list.
const std::vector<CaseLabel>& all_labels();
std::string label_name(CaseLabel c);
std::optional<CaseLabel> parse_label(std::string_view name);
// 1A2* and 2A2i need m even; 2A2ii needs m odd.
bool label_occurs(CaseLabel c, int m);

// The orbifold extension 1 → G → Ĝ → Z/2 → 1 presented by one lifting.
// Invariants: conj(g₂) = g₂⁻¹; the square's (b,a) is (0,0) or (0,1).
struct Extension {
    KodairaParams params;
    ConjugationData conj;
    NormalWord square;
    EllipticCase elliptic = EllipticCase::A1;
    // The lifting the data were read from, when known.
    std::optional<RatMap> lifting;

    std::int64_t mu() const { return conj.images[0].t; }
};

Extension extension_of(const RealStructure& rs);
// The lifting is first multiplied by g₄^b g₃^a so that the square's head
// lands in {(0,0), (0,1)}.
Extension extension_of_map(const KodairaParams& p, const RatMap& sigma);

enum class MoveKind {
    GeneratorG1,       // g₁ ↦ g₁g₂^y
    GeneratorG3,       // g₃ ↦ g₃g₁^x g₂^y
    GeneratorG4,       // g₄ ↦ g₄g₁^x g₂^y
    LiftingChange,     // σ̃ ↦ σ̃g₁^x g₂^y
    TranslationConj,   // σ̃ ↦ τσ̃τ⁻¹, τ = translation (0,0,0,shift)
};

struct Move {
    MoveKind kind = MoveKind::GeneratorG1;
    std::int64_t x = 0;
    std::int64_t y = 0;
    Rat shift;

    std::string str() const;
    friend bool operator==(const Move&, const Move&) = default;
};

using ReductionLog = std::vector<Move>;

Extension apply_move(const Extension& e, const Move& mv);
Extension replay(Extension e, const ReductionLog& log);

struct Reduction {
    CaseLabel label;
    ReductionLog log;
    Extension normal;  // replay(input, log)
};

// Throws InadmissibleExtension when an occurrence constraint fails.
Reduction reduce(const Extension& e);

// Conjugation data and square of the normal form of a label.
std::pair<ConjugationData, NormalWord> normal_form_data(CaseLabel c, int m);

// g with (σ̃g)² = 1, decided by symbolic squaring and integer elimination.
std::optional<NormalWord> splitting_witness(const Extension& e);
bool splits(const Extension& e);
// Bounded search over |exponents| <= bound.
std::optional<NormalWord> brute_force_splitting_witness(const Extension& e, int bound);

// Representative surface and lifting of a label at torsion m.
RealStructure representative(CaseLabel c, int m);

struct CaseRepresentative {
    CaseLabel label;
    RealStructure rs;
};

// Each representative is admissible and reduces to its own label.
std::vector<CaseRepresentative> enumerate_cases(int m);

// Same conjugation data and a central z with (σ̃z)² = σ̃'².
bool pair_equivalent(const Extension& e1, const Extension& e2);
// The '/'' pairs occurring at m.
std::vector<std::pair<CaseLabel, CaseLabel>> primed_pairs(int m);
// True iff every '/'' pair at m is inequivalent.
bool distinct_pairs_check(int m);

}  // namespace kodaira
