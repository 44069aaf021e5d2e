#ifndef PARTLAT_ERRATA_HPP
#define PARTLAT_ERRATA_HPP

#include <string>
#include <string_view>
#include <vector>

// Known misprints in the reference tables and formulas, as data. Each entry
// carries a check that recomputes the witness, so the ledger cannot drift
// from the library.

namespace partlat {

inline constexpr int kErrataVersion = 1;

struct ErratumCheck {
    bool printed_fails = false;  ///< the printed claim is refuted at the witness
    bool corrected_holds = false; ///< the corrected form reproduces the truth
    std::string detail;

    bool confirmed() const noexcept { return printed_fails && corrected_holds; }
};

struct Erratum {
    std::string id;
    std::string location;
    std::string printed_claim;
    std::string witness;
    std::string corrected_form;
    ErratumCheck (*check)() = nullptr;
};

const std::vector<Erratum>& errata_ledger();

/// Throws std::out_of_range for an unknown id.
const Erratum& find_erratum(std::string_view id);

enum class ErrataFormat { text, json };
ErrataFormat parse_errata_format(std::string_view name);
std::string format_errata(ErrataFormat format);

} // namespace partlat

#endif // PARTLAT_ERRATA_HPP
