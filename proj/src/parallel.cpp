#include "bellcheck/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bellcheck {

std::size_t worker_cap_from_env() {
    const char* raw = std::getenv("BELLCHECK_WORKERS");
    if (raw == nullptr || *raw == '\0') return 1;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size() || v == 0) return 1;
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace bellcheck
