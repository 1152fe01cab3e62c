#include "ogl/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "ogl/errors.hpp"

namespace ogl::kernels {

namespace {

struct Vtable {
    Backend which;
    std::size_t (*intersect)(const std::uint32_t*, std::size_t, const std::uint32_t*,
                             std::size_t, std::uint32_t*);
    std::size_t (*intersect_count)(const std::uint32_t*, std::size_t,
                                   const std::uint32_t*, std::size_t);
    void (*mix64_fill)(std::uint64_t, std::uint64_t, std::uint64_t*, std::size_t);
};

constexpr Vtable kScalar{Backend::scalar, detail::intersect_scalar,
                         detail::intersect_count_scalar, detail::mix64_fill_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2{Backend::avx2, detail::intersect_avx2,
                       detail::intersect_count_avx2, detail::mix64_fill_avx2};
#endif

Vtable resolve(Backend b) {
    if (b == Backend::auto_detect) b = avx2_supported() ? Backend::avx2 : Backend::scalar;
    if (b == Backend::avx2) {
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) return kAvx2;
#endif
        throw config_error("kernel backend avx2 not supported on this CPU");
    }
    return kScalar;
}

Vtable initial_vtable() {
    if (const char* env = std::getenv("OGL_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return resolve(Backend::scalar);
        if (std::strcmp(env, "avx2") == 0) return resolve(Backend::avx2);
    }
    return resolve(Backend::auto_detect);
}

// Swapped only by set_backend(); not meant to race with in-flight kernels.
Vtable& active() {
    static Vtable t = initial_vtable();
    return t;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void set_backend(Backend b) { active() = resolve(b); }

Backend active_backend() { return active().which; }

const char* backend_name() {
    return active().which == Backend::avx2 ? "avx2" : "scalar";
}

std::size_t intersect(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                      std::size_t nb, std::uint32_t* out) {
    return active().intersect(a, na, b, nb, out);
}

std::size_t intersect_count(const std::uint32_t* a, std::size_t na,
                            const std::uint32_t* b, std::size_t nb) {
    return active().intersect_count(a, na, b, nb);
}

void mix64_fill(std::uint64_t key, std::uint64_t start_counter, std::uint64_t* out,
                std::size_t len) {
    active().mix64_fill(key, start_counter, out, len);
}

}  // namespace ogl::kernels
