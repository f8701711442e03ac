#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ghz {

// Fixed registry of optical sites. a/b are the source arms, D/d the
// transmission rails, E/e the detector rails, p1..p4 the probe beams.
enum class Site : uint8_t {
    a1, a2, b1, b2,
    D1, D2, D3, D4,
    d1, d2, d3, d4,
    E1, E2, E3, E4,
    e1, e2, e3, e4,
    p1, p2, p3, p4,
};

inline constexpr int kNumSites = 24;
inline constexpr int kNumPhotonicSites = 20;

enum class Pol : uint8_t { H, V };

constexpr bool is_probe_site(Site s) {
    return static_cast<int>(s) >= kNumPhotonicSites;
}

const char* site_name(Site s);
std::optional<Site> parse_site(std::string_view name);

// A single optical mode: photonic site + polarization, or a bare probe site.
// Packed into one byte so occupation maps stay cheap to compare and sort.
class ModeId {
  public:
    static ModeId photonic(Site s, Pol p);
    static ModeId probe(Site s);

    Site site() const;
    Pol pol() const;  // photonic modes only
    bool is_probe() const { return code_ >= 2 * kNumPhotonicSites; }
    uint8_t code() const { return code_; }

    std::string name() const;  // "D1H", "p2"
    static std::optional<ModeId> parse(std::string_view name);

    auto operator<=>(const ModeId&) const = default;

  private:
    explicit ModeId(uint8_t code) : code_(code) {}
    uint8_t code_;
};

inline ModeId mode(Site s, Pol p) { return ModeId::photonic(s, p); }
inline ModeId probe_mode(Site s) { return ModeId::probe(s); }

// Transmission-side position groups: position k covers D_k and d_k.
// Detector-side groups cover E_k and e_k.
struct PositionGroup {
    Site upper;  // D_k / E_k
    Site lower;  // d_k / e_k
};

PositionGroup dd_group(int position);  // position in 1..4
PositionGroup ee_group(int position);

}  // namespace ghz
