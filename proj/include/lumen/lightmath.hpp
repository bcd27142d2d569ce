#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "lumen/rng.hpp"
#include "lumen/vec.hpp"

namespace lumen {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double d) { return d * (kPi / 180.0); }
inline double rad_to_deg(double r) { return r * (180.0 / kPi); }

// Wrap to (-180, 180]. std::remainder is exact, so wrapping commutes with
// exactly-representable multiples of 360.
inline double wrap_signed_deg(double deg) {
    double w = std::remainder(deg, 360.0);
    if (w <= -180.0) w = 180.0;
    return w;
}

// Wrap to [0, 360) for absolute pan angles.
inline double wrap_pan_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0) w += 360.0;
    if (w == 360.0) w = 0.0;
    return w;
}

// Angle in degrees. Interpretation (signed difference vs absolute pan vs
// elevation) is contextual; the wrap helpers above define the two canonical
// storage ranges.
struct AngleDeg {
    double value = 0.0;

    constexpr AngleDeg() = default;
    constexpr explicit AngleDeg(double deg) : value(deg) {}

    static AngleDeg signed_wrapped(double deg) { return AngleDeg(wrap_signed_deg(deg)); }
    static AngleDeg pan_wrapped(double deg) { return AngleDeg(wrap_pan_deg(deg)); }

    double rad() const { return deg_to_rad(value); }
    constexpr bool operator==(const AngleDeg&) const = default;
};

// Spherical pose around the scene center: radius in meters, absolute pan in
// [0, 360), tilt as elevation above the ground plane (90 = zenith).
struct SphericalPose {
    double radius = 0.0;
    AngleDeg pan;
    AngleDeg tilt;

    Vec3 position() const {
        const double t = tilt.rad(), p = pan.rad();
        return {radius * std::cos(t) * std::sin(p),
                radius * std::cos(t) * std::cos(p),
                radius * std::sin(t)};
    }
};

struct EncodedAngle {
    double sin = 0.0;
    double cos = 1.0;
};

// sin/cos pair of a wrapped angle difference; the bounded regression target.
inline EncodedAngle encode_angle(AngleDeg delta) {
    const double r = deg_to_rad(wrap_signed_deg(delta.value));
    return {std::sin(r), std::cos(r)};
}

// Two-argument arctangent in (-180, 180]; tolerates non-normalized pairs.
inline AngleDeg decode_angle(double sin_v, double cos_v) {
    if (sin_v == 0.0 && cos_v == 0.0)
        throw std::invalid_argument("decode_angle: (0, 0) is ambiguous");
    double deg = rad_to_deg(std::atan2(sin_v, cos_v));
    if (deg <= -180.0) deg = 180.0;
    return AngleDeg(deg);
}

struct DirectionEncoding {
    double sin_pan = 0.0;
    double cos_pan = 1.0;
    double sin_tilt = 0.0;
    double cos_tilt = 1.0;

    static DirectionEncoding from_angles(AngleDeg pan, AngleDeg tilt) {
        const EncodedAngle p = encode_angle(pan), t = encode_angle(tilt);
        return {p.sin, p.cos, t.sin, t.cos};
    }
};

// Unit direction for (pan, tilt): pan 0 looks along +y, pan 90 along +x,
// tilt 90 along +z.
inline Vec3 pan_tilt_to_unit(AngleDeg pan, AngleDeg tilt) {
    const double p = pan.rad(), t = tilt.rad();
    const double ct = std::cos(t);
    return {ct * std::sin(p), ct * std::cos(p), std::sin(t)};
}

namespace detail {
// Angle between vectors via atan2(|a x b|, a.b); well conditioned near 0 and
// 180 degrees where plain arccos loses digits.
inline double angle_between_deg(const Vec3& a, const Vec3& b) {
    return rad_to_deg(std::atan2(a.cross(b).norm(), a.dot(b)));
}
}  // namespace detail

// 3D angular distance in degrees between two (pan, tilt) directions.
inline double direction_error_deg(std::pair<AngleDeg, AngleDeg> a,
                                  std::pair<AngleDeg, AngleDeg> b) {
    return detail::angle_between_deg(pan_tilt_to_unit(a.first, a.second),
                                     pan_tilt_to_unit(b.first, b.second));
}

// Linear radiometric RGB weights; only the direction of (r, g, b) carries
// color meaning, the scale is folded into the light intensity.
struct LightColor {
    double r = 1.0, g = 1.0, b = 1.0;

    constexpr Vec3 vec() const { return {r, g, b}; }
    static constexpr LightColor from_vec(const Vec3& v) { return {v.x, v.y, v.z}; }
    constexpr bool operator==(const LightColor&) const = default;
};

// Angular error between color vectors, in degrees. Symmetric and invariant
// to positive scaling of either argument.
inline double rgb_angular_error_deg(const LightColor& a, const LightColor& b) {
    const Vec3 va = a.vec(), vb = b.vec();
    if (va.norm2() == 0.0 || vb.norm2() == 0.0)
        throw std::invalid_argument("rgb_angular_error_deg: zero color vector");
    return detail::angle_between_deg(va, vb);
}

// ---------------------------------------------------------------------------
// Planckian-locus light color
// ---------------------------------------------------------------------------

struct Chromaticity {
    double x = 0.0;
    double y = 0.0;
};

namespace detail {

// CIE 1931 2-degree color matching functions, 380..780 nm in 5 nm steps.
inline constexpr std::array<std::array<double, 3>, 81> kCie1931 = {{
    {0.0014, 0.0000, 0.0065}, {0.0022, 0.0001, 0.0105}, {0.0042, 0.0001, 0.0201},
    {0.0076, 0.0002, 0.0362}, {0.0143, 0.0004, 0.0679}, {0.0232, 0.0006, 0.1102},
    {0.0435, 0.0012, 0.2074}, {0.0776, 0.0022, 0.3713}, {0.1344, 0.0040, 0.6456},
    {0.2148, 0.0073, 1.0391}, {0.2839, 0.0116, 1.3856}, {0.3285, 0.0168, 1.6230},
    {0.3483, 0.0230, 1.7471}, {0.3481, 0.0298, 1.7826}, {0.3362, 0.0380, 1.7721},
    {0.3187, 0.0480, 1.7441}, {0.2908, 0.0600, 1.6692}, {0.2511, 0.0739, 1.5281},
    {0.1954, 0.0910, 1.2876}, {0.1421, 0.1126, 1.0419}, {0.0956, 0.1390, 0.8130},
    {0.0580, 0.1693, 0.6162}, {0.0320, 0.2080, 0.4652}, {0.0147, 0.2586, 0.3533},
    {0.0049, 0.3230, 0.2720}, {0.0024, 0.4073, 0.2123}, {0.0093, 0.5030, 0.1582},
    {0.0291, 0.6082, 0.1117}, {0.0633, 0.7100, 0.0782}, {0.1096, 0.7932, 0.0573},
    {0.1655, 0.8620, 0.0422}, {0.2257, 0.9149, 0.0298}, {0.2904, 0.9540, 0.0203},
    {0.3597, 0.9803, 0.0134}, {0.4334, 0.9950, 0.0087}, {0.5121, 1.0000, 0.0057},
    {0.5945, 0.9950, 0.0039}, {0.6784, 0.9786, 0.0027}, {0.7621, 0.9520, 0.0021},
    {0.8425, 0.9154, 0.0018}, {0.9163, 0.8700, 0.0017}, {0.9786, 0.8163, 0.0014},
    {1.0263, 0.7570, 0.0011}, {1.0567, 0.6949, 0.0010}, {1.0622, 0.6310, 0.0008},
    {1.0456, 0.5668, 0.0006}, {1.0026, 0.5030, 0.0003}, {0.9384, 0.4412, 0.0002},
    {0.8544, 0.3810, 0.0002}, {0.7514, 0.3210, 0.0001}, {0.6424, 0.2650, 0.0000},
    {0.5419, 0.2170, 0.0000}, {0.4479, 0.1750, 0.0000}, {0.3608, 0.1382, 0.0000},
    {0.2835, 0.1070, 0.0000}, {0.2187, 0.0816, 0.0000}, {0.1649, 0.0610, 0.0000},
    {0.1212, 0.0446, 0.0000}, {0.0874, 0.0320, 0.0000}, {0.0636, 0.0232, 0.0000},
    {0.0468, 0.0170, 0.0000}, {0.0329, 0.0119, 0.0000}, {0.0227, 0.0082, 0.0000},
    {0.0158, 0.0057, 0.0000}, {0.0114, 0.0041, 0.0000}, {0.0081, 0.0029, 0.0000},
    {0.0058, 0.0021, 0.0000}, {0.0041, 0.0015, 0.0000}, {0.0029, 0.0010, 0.0000},
    {0.0020, 0.0007, 0.0000}, {0.0014, 0.0005, 0.0000}, {0.0010, 0.0004, 0.0000},
    {0.0007, 0.0002, 0.0000}, {0.0005, 0.0002, 0.0000}, {0.0003, 0.0001, 0.0000},
    {0.0002, 0.0001, 0.0000}, {0.0002, 0.0001, 0.0000}, {0.0001, 0.0000, 0.0000},
    {0.0001, 0.0000, 0.0000}, {0.0001, 0.0000, 0.0000}, {0.0000, 0.0000, 0.0000},
}};

// Planck spectral radiance, relative scale (normalization cancels later).
inline double planck_radiance(double wavelength_nm, double kelvin) {
    const double wlm = wavelength_nm * 1e-9;
    return (3.74183e-16 * std::pow(wlm, -5.0)) /
           (std::exp(1.4388e-2 / (wlm * kelvin)) - 1.0);
}

}  // namespace detail

// CIE 1931 chromaticity of a blackbody radiator at the given temperature.
inline Chromaticity planckian_chromaticity(double cct_kelvin) {
    double X = 0.0, Y = 0.0, Z = 0.0;
    for (std::size_t i = 0; i < detail::kCie1931.size(); ++i) {
        const double me = detail::planck_radiance(380.0 + 5.0 * static_cast<double>(i), cct_kelvin);
        X += me * detail::kCie1931[i][0];
        Y += me * detail::kCie1931[i][1];
        Z += me * detail::kCie1931[i][2];
    }
    const double sum = X + Y + Z;
    return {X / sum, Y / sum};
}

namespace detail {
inline Vec3 chromaticity_to_rgb_raw(const Chromaticity& c) {
    const double X = c.x / c.y, Y = 1.0, Z = (1.0 - c.x - c.y) / c.y;
    return {3.2404542 * X - 1.5371385 * Y - 0.4985314 * Z,
            -0.9692660 * X + 1.8760108 * Y + 0.0415560 * Z,
            0.0556434 * X - 0.2040259 * Y + 1.0572252 * Z};
}
}  // namespace detail

inline bool in_srgb_gamut(const Chromaticity& c) {
    const Vec3 rgb = detail::chromaticity_to_rgb_raw(c);
    return rgb.x >= 0.0 && rgb.y >= 0.0 && rgb.z >= 0.0;
}

// xy chromaticity to linear RGB (sRGB primaries, D65 white), negative lobes
// clipped, normalized so the max channel is exactly 1.
inline LightColor chromaticity_to_rgb(const Chromaticity& c) {
    Vec3 rgb = detail::chromaticity_to_rgb_raw(c);
    rgb.x = std::max(rgb.x, 0.0);
    rgb.y = std::max(rgb.y, 0.0);
    rgb.z = std::max(rgb.z, 0.0);
    const double m = rgb.max_component();
    if (m <= 0.0) throw std::runtime_error("chromaticity_to_rgb: out-of-gamut chromaticity");
    return LightColor::from_vec(rgb / m);
}

// Linear RGB of a blackbody radiator; cct must lie in [1000, 15000] K.
inline LightColor planckian_rgb(double cct_kelvin) {
    if (!(cct_kelvin >= 1000.0 && cct_kelvin <= 15000.0))
        throw std::invalid_argument("planckian_rgb: cct outside [1000, 15000] K");
    return chromaticity_to_rgb(planckian_chromaticity(cct_kelvin));
}

// Random light color near the Planckian locus: uniform cct in the given
// range, chromaticity perturbed uniformly in a disc of radius max_offset.
// Perturbations that leave the sRGB gamut are rejected and redrawn so the
// realized chromaticity is the sampled one, never a gamut-clipped shadow of
// it. A zero offset reproduces planckian_rgb(cct) bit for bit.
inline LightColor sample_near_planckian(Rng& rng,
                                        std::pair<double, double> cct_range,
                                        double max_offset = 0.02) {
    if (!(cct_range.first >= 1000.0 && cct_range.second <= 15000.0 &&
          cct_range.first <= cct_range.second))
        throw std::invalid_argument("sample_near_planckian: invalid cct range");
    const double cct = rng.uniform(cct_range.first, cct_range.second);
    const Chromaticity base = planckian_chromaticity(cct);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double radius = max_offset * std::sqrt(rng.uniform());
        const double angle = rng.uniform(0.0, 2.0 * kPi);
        const Chromaticity c{base.x + radius * std::cos(angle),
                             base.y + radius * std::sin(angle)};
        if (in_srgb_gamut(c)) return chromaticity_to_rgb(c);
    }
    // base itself out of gamut (very low cct); fall back to the clipped locus color
    return chromaticity_to_rgb(base);
}

}  // namespace lumen
