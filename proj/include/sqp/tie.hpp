#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqp/braid.hpp"
#include "sqp/kernels.hpp"
#include "sqp/laurent.hpp"
#include "sqp/selection.hpp"

namespace sqp {

// An unknotted-core annulus given as a band word: boundary = companion and a
// parallel copy. `designated` is the band the target band is spliced through.
struct AnnulusWord {
    std::string name;
    BandWord word{1};
    std::size_t designated = 0;
    std::string companion;
    LaurentPolynomial companion_alexander;
    int linking = 1;  // between the two boundary components
};

// b(1,6) b(3,8) b(2,5) b(1,4) b(3,7) b(2,6) b(5,8) b(4,7), band 8 designated,
// companion m(9_46) with Delta = 2t^2 - 5t + 2.
AnnulusWord bundled_alpha();
// The positive Hopf band b(1,2) b(1,2); companion the unknot. A control.
AnnulusWord trivial_annulus();
// Throws InputError unless the word is an annulus with the advertised boundary.
void validate_annulus(const AnnulusWord& annulus);

struct Assertion {
    enum class Status { pass, fail, paper_cited };
    std::string id;
    std::string description;
    Status status = Status::pass;
    std::string detail;
};

const char* to_string(Assertion::Status status);

struct TieResult {
    BandWord word{1};
    // Positions of the target's letters in `word`. The selected letter maps to `marked`.
    BandRelocation relocation;
    std::size_t marked = 0;
    std::string annulus;
    BandSelection selection;
    int iteration = 1;
    std::vector<Assertion> certificate;
};

struct TieWord {
    BandWord word{1};
    BandRelocation relocation;
    std::size_t marked = 0;
};

// The word template alone, without checks. With the annulus rotated so its
// designated band (p,q) comes last and rest = the other letters in cyclic
// order, and the selected letter (i,j) of the target shifted to (I,J) = (i+m, j+m):
//   target[<k] . rest . b(q,J) b(p,I) . target[>k]   in B_{n+m}
// b(p,I) is the marked letter standing in for the selected band afterwards.
TieWord tie_word(const AnnulusWord& annulus, const BandWord& target, std::size_t band);

// Ties the annulus into the selected band and checks post-conditions:
// (a) Euler characteristic, (b) surface components, (c) boundary components,
// (d) linking matrix, (e) signature, (f) Alexander behaviour for the case.
// Throws SelectionInvalid for a bad selection and OracleViolation on any failure.
TieResult tie(const AnnulusWord& annulus, const BandWord& target, const BandSelection& selection, int iteration = 1,
              Execution mode = Execution::parallel);
// The checking half of tie() applied to an arbitrary candidate word.
TieResult certify_tie(const AnnulusWord& annulus, const BandWord& target, const BandSelection& selection,
                      TieWord candidate, int iteration = 1, Execution mode = Execution::parallel);

struct FamilyMember {
    int iteration = 0;
    BandWord word{1};
    BandSelection selection;       // the band the next step ties into
    std::optional<TieResult> tie;  // absent for the seed
};

// Seed plus `count` iterated ties, always into the same band.
std::vector<FamilyMember> family(const BandWord& target, int count, const AnnulusWord& annulus,
                                 Execution mode = Execution::parallel);

// Folds TB(K1 # K2) = TB(K1) + TB(K2) + 1.
int tb_connected_sum(const std::vector<int>& values);

}  // namespace sqp
