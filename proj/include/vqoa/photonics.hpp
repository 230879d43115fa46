#pragma once

#include <complex>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vqoa::photonics {

/// Tabulated (wavelength nm, n, kappa); linear interpolation, no extrapolation.
class MaterialTable {
public:
    MaterialTable(std::string name, std::vector<double> wavelength_nm, std::vector<double> n,
                  std::vector<double> kappa);

    /// Constant index over [lo, hi] nm.
    static MaterialTable constant(std::string name, double n, double kappa = 0.0, double lo_nm = 100.0,
                                  double hi_nm = 5000.0);

    const std::string& name() const { return name_; }
    double min_wavelength() const { return wl_.front(); }
    double max_wavelength() const { return wl_.back(); }
    bool covers(double wavelength_nm) const;

    /// n + i kappa at the given wavelength.
    std::complex<double> index_at(double wavelength_nm) const;

private:
    std::string name_;
    std::vector<double> wl_, n_, k_;
};

/// Reads `wavelength_nm,n,k` CSV with a header line.
MaterialTable load_material_csv(const std::filesystem::path& path, std::string name = {});

class MaterialDb {
public:
    void add(MaterialTable m);
    const MaterialTable& get(const std::string& name) const;
    bool contains(const std::string& name) const { return tables_.count(name) > 0; }
    std::vector<std::string> names() const;

    /// Every *.csv in `dir`, named by file stem.
    static MaterialDb load_dir(const std::filesystem::path& dir);

private:
    std::map<std::string, MaterialTable> tables_;
};

/// 2-bit material codes: 00 SiO2, 01 Si3N4, 10 Al2O3, 11 TiO2.
inline const std::vector<std::string>& default_palette() {
    static const std::vector<std::string> p{"SiO2", "Si3N4", "Al2O3", "TiO2"};
    return p;
}

struct Layer {
    const MaterialTable* material = nullptr;
    double thickness_nm = 0.0;
};

/// Planar stack at normal incidence; layers are listed from the incidence
/// side. The referenced material tables must outlive the stack.
struct Stack {
    double incidence_index = 1.0;
    std::vector<Layer> layers;
    double exit_index = 1.5;

    void validate() const;
};

struct TmmResponse {
    double transmittance = 0.0;
    double reflectance = 0.0;
};

/// Characteristic-matrix method. Throws if a material table does not cover
/// the wavelength or the result is non-finite; T is clamped to [0, 1] only
/// for overshoots within 1e-9.
TmmResponse tmm_response(const Stack& stack, double wavelength_nm);
double tmm_transmission(const Stack& stack, double wavelength_nm);

/// Tabulated spectrum (e.g. solar irradiance, W m^-2 nm^-1).
class Spectrum {
public:
    Spectrum(std::vector<double> wavelength_nm, std::vector<double> values);
    static Spectrum flat(double lo_nm, double hi_nm, double value, double step_nm = 5.0);

    double at(double wavelength_nm) const;
    std::span<const double> wavelengths() const { return wl_; }
    std::span<const double> values() const { return v_; }

private:
    std::vector<double> wl_, v_;
};

/// Reads `wavelength_nm,irradiance` CSV with a header line.
Spectrum load_spectrum_csv(const std::filesystem::path& path);

std::vector<double> uniform_grid(double lo_nm, double hi_nm, double step_nm);

struct Band {
    double lo_nm = 400.0;
    double hi_nm = 700.0;
};

enum class Side { Left, Right };

/// Transmission, possibly discontinuous: T(lambda, side) is the one-sided
/// limit from the given side. Continuous curves can ignore `side`.
using TransmissionFn = std::function<double(double, Side)>;

/// 10 * int (T S - S 1_band)^2 / int S^2, trapezoid on `grid` with the band
/// edges inserted as breakpoints and one-sided limits taken at each.
double fom_from_transmission(std::span<const double> grid, const Spectrum& solar, const TransmissionFn& t,
                             Band band);

/// Energy-saving window design problem over bitstrings.
struct WindowDesign {
    std::vector<const MaterialTable*> palette;  // indexed by 2-bit code
    Spectrum solar = Spectrum::flat(300, 2500, 1.0);
    std::vector<double> grid = uniform_grid(300, 2500, 5);
    Band band;
    int layers = 6;
    double total_thickness_nm = 1200.0;
    double incidence_index = 1.0;
    double exit_index = 1.45;
    std::optional<Layer> cap;  // placed on the incidence side

    static WindowDesign with_palette(const MaterialDb& db, const std::vector<std::string>& names = default_palette());

    int bit_count() const { return 2 * layers; }
    void validate() const;
    /// Pairs of bits, big-endian within each pair, select palette entries.
    Stack stack_for(std::span<const int> bits) const;
    std::vector<double> transmission(std::span<const int> bits) const;
    double fom(std::span<const int> bits) const;
};

/// Convenience wrapper matching a black-box cost.
double window_fom(std::span<const int> bits, const WindowDesign& design);

}  // namespace vqoa::photonics
