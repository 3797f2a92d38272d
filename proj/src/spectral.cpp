#include "afc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "afc/params.hpp"

namespace afc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// In-place iterative radix-2 Cooley-Tukey; a.size() must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        const std::complex<double> wn(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wn;
            }
        }
    }
    if (inverse) {
        for (auto& z : a) z /= static_cast<double>(n);
    }
}

/// Chirp phase exp(sign * i * pi * k^2 / n), with k^2 reduced mod 2n to keep
/// the trig argument small.
std::complex<double> chirp(std::uint64_t k, std::size_t n, double sign) {
    std::uint64_t m = (k * k) % (2 * static_cast<std::uint64_t>(n));
    double angle = sign * kPi * static_cast<double>(m) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

/// Bluestein chirp-z transform: length-n DFT for arbitrary n via two
/// power-of-two FFTs.
std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x,
                                                std::size_t n) {
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> a(m), b(m);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> w = chirp(k, n, -1.0);
        a[k] = (k < x.size() ? x[k] : 0.0) * w;
        b[k] = std::conj(w);
        if (k > 0) b[m - k] = b[k];
    }
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, true);
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp(k, n, -1.0);
    return out;
}

}  // namespace

namespace detail {

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x,
                                      std::size_t n) {
    if (is_pow2(n)) {
        std::vector<std::complex<double>> a(n);
        std::copy(x.begin(), x.end(), a.begin());
        fft_pow2(a, false);
        return a;
    }
    return dft_bluestein(x, n);
}

}  // namespace detail

PulseTrain synthesize_train(std::vector<double> amplitudes, double fwhm_t_s,
                            double mode_bin_tm_s, double sample_rate_hz) {
    if (amplitudes.empty())
        throw InvalidParameter("amplitudes", 0.0, "need at least one mode amplitude");
    if (!(fwhm_t_s > 0)) throw InvalidParameter("fwhm_t_s", fwhm_t_s, "must be > 0");
    if (!(mode_bin_tm_s > 0))
        throw InvalidParameter("mode_bin_tm_s", mode_bin_tm_s, "must be > 0");
    if (sample_rate_hz == 0.0) sample_rate_hz = kDefaultSamplesPerBin / mode_bin_tm_s;
    if (!(sample_rate_hz * mode_bin_tm_s >= kMinSamplesPerBin)) {
        throw UndersampledTrain("sample rate " + detail::format_value(sample_rate_hz) +
                                " Hz gives fewer than 20 samples per bin");
    }

    PulseTrain train;
    train.mode_bin_tm_s = mode_bin_tm_s;
    train.fwhm_t_s = fwhm_t_s;
    train.sample_rate_hz = sample_rate_hz;

    const std::size_t n_bins = amplitudes.size();
    const double dt = 1.0 / sample_rate_hz;
    const auto n_samples = static_cast<std::size_t>(
        std::llround(sample_rate_hz * static_cast<double>(n_bins) * mode_bin_tm_s));
    train.samples.resize(n_samples);
    // Field envelope: intensity FWHM T means exp(-2 ln2 (t-c)^2 / T^2) in field.
    const double coeff = 2.0 * kLn2 / (fwhm_t_s * fwhm_t_s);
    for (std::size_t i = 0; i < n_samples; ++i) {
        double t = (static_cast<double>(i) + 0.5) * dt;
        auto bin = static_cast<std::size_t>(t / mode_bin_tm_s);
        if (bin >= n_bins) bin = n_bins - 1;
        double center = (static_cast<double>(bin) + 0.5) * mode_bin_tm_s;
        double u = t - center;
        train.samples[i] = amplitudes[bin] * std::exp(-coeff * u * u);
    }
    train.amplitudes = std::move(amplitudes);
    return train;
}

PowerSpectrum power_spectrum(const PulseTrain& train, int pad_factor, std::size_t fft_length) {
    if (train.samples.empty())
        throw InvalidParameter("train", 0.0, "train has no samples");
    if (pad_factor < 1) throw InvalidParameter("pad_factor", pad_factor, "must be >= 1");
    const std::size_t n = train.samples.size();
    std::size_t nfft = fft_length ? fft_length : static_cast<std::size_t>(pad_factor) * n;
    if (nfft < n)
        throw InvalidParameter("fft_length", static_cast<double>(fft_length),
                               "must cover the sample count");

    std::vector<std::complex<double>> x(train.samples.begin(), train.samples.end());
    std::vector<std::complex<double>> spec = detail::dft(x, nfft);

    const double dt = train.dt();
    const double df = train.sample_rate_hz / static_cast<double>(nfft);
    PowerSpectrum out;
    out.resolution_hz = df;
    out.frequencies_hz.resize(nfft);
    out.power_density.resize(nfft);
    // Reorder to ascending frequency; DFT bins above nfft/2 are negative.
    const std::size_t n_neg = nfft / 2;
    const std::size_t n_pos = nfft - n_neg;  // includes DC
    for (std::size_t i = 0; i < n_neg; ++i) {
        std::size_t k = n_pos + i;
        out.frequencies_hz[i] = (static_cast<double>(k) - static_cast<double>(nfft)) * df;
        out.power_density[i] = std::norm(spec[k] * dt);
    }
    for (std::size_t k = 0; k < n_pos; ++k) {
        out.frequencies_hz[n_neg + k] = static_cast<double>(k) * df;
        out.power_density[n_neg + k] = std::norm(spec[k] * dt);
    }
    return out;
}

double band_energy_fraction(const PowerSpectrum& spectrum, double half_width_hz) {
    if (!(half_width_hz > 0))
        throw InvalidParameter("half_width_hz", half_width_hz, "must be > 0");
    const auto& f = spectrum.frequencies_hz;
    const auto& p = spectrum.power_density;
    if (f.size() < 2) throw InvalidParameter("spectrum", 0.0, "grid too small");
    if (half_width_hz > std::max(std::abs(f.front()), std::abs(f.back()))) {
        throw BandExceedsGrid("half width " + detail::format_value(half_width_hz) +
                              " Hz exceeds the spectral grid");
    }
    double total = 0.0, band = 0.0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        double seg = 0.5 * (p[i] + p[i + 1]) * (f[i + 1] - f[i]);
        total += seg;
        if (std::abs(f[i]) <= half_width_hz && std::abs(f[i + 1]) <= half_width_hz) band += seg;
    }
    if (!(total > 0)) throw InvalidParameter("spectrum", 0.0, "zero total spectral energy");
    return band / total;
}

std::vector<double> modulation_peaks(const PowerSpectrum& spectrum, int count,
                                     double min_relative_power) {
    if (count < 1) throw InvalidParameter("count", count, "must be >= 1");
    const auto& f = spectrum.frequencies_hz;
    const auto& p = spectrum.power_density;
    double pmax = *std::max_element(p.begin(), p.end());
    double floor = min_relative_power * pmax;

    struct Peak {
        double power;
        double frequency;
    };
    std::vector<Peak> candidates;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (p[i] > p[i - 1] && p[i] > p[i + 1] && std::abs(f[i]) > spectrum.resolution_hz &&
            p[i] >= floor) {
            candidates.push_back({p[i], f[i]});
        }
    }
    if (candidates.size() < static_cast<std::size_t>(count)) {
        throw TooFewPeaks("spectrum has " + std::to_string(candidates.size()) +
                          " qualifying local maxima, " + std::to_string(count) + " requested");
    }
    std::sort(candidates.begin(), candidates.end(), [](const Peak& a, const Peak& b) {
        if (a.power != b.power) return a.power > b.power;
        return a.frequency < b.frequency;
    });
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(candidates[static_cast<std::size_t>(i)].frequency);
    return out;
}

}  // namespace afc
