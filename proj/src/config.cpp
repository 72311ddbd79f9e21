#include "vnum/config.hpp"

#include <cstdlib>
#include <string>

namespace vnum::config {

namespace {

long long env_or(const char* name, long long fallback, long long lo, long long hi) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0') return fallback;
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    return v;
}

} // namespace

int max_graph_vertices() {
    static int v = static_cast<int>(env_or("VNUM_MAX_VERTICES", 24, 1, 64));
    return v;
}

int max_betti_vars() {
    static int v = static_cast<int>(env_or("VNUM_MAX_BETTI_VARS", 20, 1, 30));
    return v;
}

long long max_complex_faces() {
    static long long v = env_or("VNUM_MAX_COMPLEX_FACES", 1LL << 21, 1024, 1LL << 28);
    return v;
}

unsigned long long default_seed() {
    static unsigned long long v =
        static_cast<unsigned long long>(env_or("VNUM_SEED", 20260808LL, 0, (1LL << 62)));
    return v;
}

} // namespace vnum::config
