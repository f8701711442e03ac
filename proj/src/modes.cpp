#include "ghzsim/modes.hpp"

#include <stdexcept>

namespace ghz {

namespace {
constexpr std::array<const char*, kNumSites> kSiteNames = {
    "a1", "a2", "b1", "b2",
    "D1", "D2", "D3", "D4",
    "d1", "d2", "d3", "d4",
    "E1", "E2", "E3", "E4",
    "e1", "e2", "e3", "e4",
    "p1", "p2", "p3", "p4",
};
}  // namespace

const char* site_name(Site s) { return kSiteNames[static_cast<int>(s)]; }

std::optional<Site> parse_site(std::string_view name) {
    for (int i = 0; i < kNumSites; ++i) {
        if (name == kSiteNames[i]) return static_cast<Site>(i);
    }
    return std::nullopt;
}

ModeId ModeId::photonic(Site s, Pol p) {
    if (is_probe_site(s)) throw std::invalid_argument("probe site carries no polarization");
    return ModeId(static_cast<uint8_t>(2 * static_cast<int>(s) + static_cast<int>(p)));
}

ModeId ModeId::probe(Site s) {
    if (!is_probe_site(s)) throw std::invalid_argument("photonic site requires a polarization");
    return ModeId(static_cast<uint8_t>(2 * kNumPhotonicSites +
                                       (static_cast<int>(s) - kNumPhotonicSites)));
}

Site ModeId::site() const {
    if (is_probe()) return static_cast<Site>(kNumPhotonicSites + (code_ - 2 * kNumPhotonicSites));
    return static_cast<Site>(code_ / 2);
}

Pol ModeId::pol() const {
    if (is_probe()) throw std::logic_error("probe mode has no polarization");
    return static_cast<Pol>(code_ % 2);
}

std::string ModeId::name() const {
    std::string out = site_name(site());
    if (!is_probe()) out += (pol() == Pol::H ? 'H' : 'V');
    return out;
}

std::optional<ModeId> ModeId::parse(std::string_view name) {
    if (name.size() < 2) return std::nullopt;
    char last = name.back();
    if (last == 'H' || last == 'V') {
        auto s = parse_site(name.substr(0, name.size() - 1));
        if (s && !is_probe_site(*s))
            return ModeId::photonic(*s, last == 'H' ? Pol::H : Pol::V);
    }
    auto s = parse_site(name);
    if (s && is_probe_site(*s)) return ModeId::probe(*s);
    return std::nullopt;
}

PositionGroup dd_group(int position) {
    if (position < 1 || position > 4) throw std::invalid_argument("position must be in 1..4");
    return {static_cast<Site>(static_cast<int>(Site::D1) + position - 1),
            static_cast<Site>(static_cast<int>(Site::d1) + position - 1)};
}

PositionGroup ee_group(int position) {
    if (position < 1 || position > 4) throw std::invalid_argument("position must be in 1..4");
    return {static_cast<Site>(static_cast<int>(Site::E1) + position - 1),
            static_cast<Site>(static_cast<int>(Site::e1) + position - 1)};
}

}  // namespace ghz
