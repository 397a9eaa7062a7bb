#ifndef REGBISIM_LAW_REPORT_HPP
#define REGBISIM_LAW_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace regbisim {

/// Outcome of one randomized or exhaustive law probe.
struct LawReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;  // probes abandoned because of a size cap
    std::vector<std::string> exhibits;  // first few violations
    std::vector<std::string> notes;

    bool ok() const noexcept { return exhibits.empty(); }

    void fail(std::string exhibit) {
        if (exhibits.size() < 5) exhibits.push_back(std::move(exhibit));
        else ++suppressed;
    }
    std::size_t suppressed = 0;
};

}  // namespace regbisim

#endif
