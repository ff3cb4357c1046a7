#include "asw/series.hpp"

namespace asw::detail {

namespace {

constexpr std::uint32_t kMod = 998244353;  // 119 * 2^23 + 1
constexpr std::uint32_t kRoot = 3;

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kMod;
    while (e) {
        if (e & 1) r = r * b % kMod;
        b = b * b % kMod;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Twiddles for one stage with Shoup precomputation: w' = floor(w 2^32 / mod).
struct twiddles {
    std::vector<std::uint32_t> w, wp;
};

const twiddles& stage_twiddles(std::size_t len, bool invert) {
    thread_local std::vector<twiddles> cache[2];
    auto& c = cache[invert];
    std::size_t lg = 0;
    while ((std::size_t(1) << lg) < len) ++lg;
    if (c.size() <= lg) c.resize(lg + 1);
    twiddles& t = c[lg];
    if (t.w.empty()) {
        std::uint64_t w = pow_mod(kRoot, (kMod - 1) / len);
        if (invert) w = pow_mod(w, kMod - 2);
        t.w.resize(len / 2);
        t.wp.resize(len / 2);
        std::uint64_t x = 1;
        for (std::size_t k = 0; k < len / 2; ++k) {
            t.w[k] = static_cast<std::uint32_t>(x);
            t.wp[k] = static_cast<std::uint32_t>((x << 32) / kMod);
            x = x * w % kMod;
        }
    }
    return t;
}

void ntt(std::vector<std::uint32_t>& a, bool invert) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const twiddles& t = stage_twiddles(len, invert);
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n; i += len) {
            std::uint32_t* lo = a.data() + i;
            std::uint32_t* hi = lo + half;
            for (std::size_t k = 0; k < half; ++k) {
                const std::uint32_t x = hi[k];
                const std::uint32_t q = static_cast<std::uint32_t>((std::uint64_t(x) * t.wp[k]) >> 32);
                std::uint32_t v = x * t.w[k] - q * kMod;
                if (v >= kMod) v -= kMod;
                const std::uint32_t u = lo[k];
                lo[k] = u + v >= kMod ? u + v - kMod : u + v;
                hi[k] = u >= v ? u - v : u + kMod - v;
            }
        }
    }
    if (invert) {
        std::uint64_t inv_n = pow_mod(n, kMod - 2);
        for (auto& x : a) x = static_cast<std::uint32_t>(x * inv_n % kMod);
    }
}

}  // namespace

std::vector<std::uint32_t> ntt_multiply_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                            int len, std::uint32_t p) {
    const std::size_t la = std::min<std::size_t>(a.size(), len), lb = std::min<std::size_t>(b.size(), len);
    std::size_t sz = 1;
    while (sz < la + lb - 1) sz <<= 1;
    std::vector<std::uint32_t> fa(sz, 0), fb(sz, 0);
    std::copy(a.begin(), a.begin() + la, fa.begin());
    std::copy(b.begin(), b.begin() + lb, fb.begin());
    ntt(fa, false);
    ntt(fb, false);
    for (std::size_t i = 0; i < sz; ++i) fa[i] = static_cast<std::uint32_t>(std::uint64_t(fa[i]) * fb[i] % kMod);
    ntt(fa, true);
    std::vector<std::uint32_t> out(len, 0);
    const std::size_t keep = std::min<std::size_t>(len, la + lb - 1);
    for (std::size_t i = 0; i < keep; ++i) out[i] = fa[i] % p;
    return out;
}

}  // namespace asw::detail
