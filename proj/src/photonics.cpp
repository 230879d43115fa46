#include "vqoa/photonics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace vqoa::photonics {

namespace {

using cd = std::complex<double>;

void check_grid(const std::vector<double>& wl, const std::string& what) {
    if (wl.size() < 2) {
        throw std::invalid_argument(what + ": need at least two samples");
    }
    for (size_t i = 0; i < wl.size(); ++i) {
        if (!std::isfinite(wl[i]) || (i > 0 && !(wl[i] > wl[i - 1]))) {
            throw std::invalid_argument(what + ": wavelengths must be finite and strictly increasing");
        }
    }
}

// Linear interpolation on a strictly increasing grid; x must be covered.
double interp(const std::vector<double>& x, const std::vector<double>& y, double at) {
    auto it = std::upper_bound(x.begin(), x.end(), at);
    if (it == x.end()) {
        return y.back();
    }
    size_t hi = static_cast<size_t>(it - x.begin());
    size_t lo = hi - 1;
    double w = (at - x[lo]) / (x[hi] - x[lo]);
    return y[lo] + w * (y[hi] - y[lo]);
}

std::vector<std::vector<double>> read_csv(const std::filesystem::path& path, size_t columns) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::vector<double>> cols(columns);
    std::string line;
    size_t lineno = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= columns) {
                break;
            }
            try {
                size_t used = 0;
                cols[c].push_back(std::stod(cell, &used));
            } catch (const std::exception&) {
                throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
            }
            ++c;
        }
        if (c != columns) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                                     std::to_string(columns) + " columns");
        }
    }
    return cols;
}

}  // namespace

MaterialTable::MaterialTable(std::string name, std::vector<double> wavelength_nm, std::vector<double> n,
                             std::vector<double> kappa)
    : name_(std::move(name)), wl_(std::move(wavelength_nm)), n_(std::move(n)), k_(std::move(kappa)) {
    check_grid(wl_, "material " + name_);
    if (n_.size() != wl_.size() || k_.size() != wl_.size()) {
        throw std::invalid_argument("material " + name_ + ": column lengths differ");
    }
    for (size_t i = 0; i < wl_.size(); ++i) {
        if (!(n_[i] > 0) || !(k_[i] >= 0) || !std::isfinite(n_[i]) || !std::isfinite(k_[i])) {
            throw std::invalid_argument("material " + name_ + ": need n > 0 and k >= 0");
        }
    }
}

MaterialTable MaterialTable::constant(std::string name, double n, double kappa, double lo_nm, double hi_nm) {
    return MaterialTable(std::move(name), {lo_nm, hi_nm}, {n, n}, {kappa, kappa});
}

bool MaterialTable::covers(double wavelength_nm) const {
    return wavelength_nm >= wl_.front() && wavelength_nm <= wl_.back();
}

std::complex<double> MaterialTable::index_at(double wavelength_nm) const {
    if (!covers(wavelength_nm)) {
        throw std::out_of_range("material " + name_ + " has no data at " + std::to_string(wavelength_nm) + " nm");
    }
    return {interp(wl_, n_, wavelength_nm), interp(wl_, k_, wavelength_nm)};
}

MaterialTable load_material_csv(const std::filesystem::path& path, std::string name) {
    auto cols = read_csv(path, 3);
    if (name.empty()) {
        name = path.stem().string();
    }
    return MaterialTable(std::move(name), std::move(cols[0]), std::move(cols[1]), std::move(cols[2]));
}

void MaterialDb::add(MaterialTable m) {
    std::string key = m.name();
    tables_.insert_or_assign(std::move(key), std::move(m));
}

const MaterialTable& MaterialDb::get(const std::string& name) const {
    auto it = tables_.find(name);
    if (it == tables_.end()) {
        throw std::out_of_range("unknown material " + name);
    }
    return it->second;
}

std::vector<std::string> MaterialDb::names() const {
    std::vector<std::string> out;
    for (const auto& kv : tables_) {
        out.push_back(kv.first);
    }
    return out;
}

MaterialDb MaterialDb::load_dir(const std::filesystem::path& dir) {
    MaterialDb db;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".csv") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        db.add(load_material_csv(f));
    }
    if (files.empty()) {
        throw std::runtime_error("no material CSV files in " + dir.string());
    }
    return db;
}

void Stack::validate() const {
    if (!(incidence_index > 0) || !(exit_index > 0)) {
        throw std::invalid_argument("stack: media indices must be positive");
    }
    for (const auto& l : layers) {
        if (l.material == nullptr) {
            throw std::invalid_argument("stack: layer without material");
        }
        if (!(l.thickness_nm > 0) || !std::isfinite(l.thickness_nm)) {
            throw std::invalid_argument("stack: layer thickness must be positive");
        }
    }
}

TmmResponse tmm_response(const Stack& stack, double wavelength_nm) {
    stack.validate();
    if (!(wavelength_nm > 0)) {
        throw std::invalid_argument("wavelength must be positive");
    }
    // Characteristic matrices use N = n - i*kappa so that kappa > 0 attenuates
    // under this matrix form.
    cd m11 = 1, m12 = 0, m21 = 0, m22 = 1;
    for (const auto& layer : stack.layers) {
        cd nk = layer.material->index_at(wavelength_nm);
        cd eta(nk.real(), -nk.imag());
        cd delta = 2.0 * std::numbers::pi * eta * layer.thickness_nm / wavelength_nm;
        cd c = std::cos(delta);
        cd s = std::sin(delta);
        cd a11 = c, a12 = cd(0, 1) * s / eta, a21 = cd(0, 1) * eta * s, a22 = c;
        cd n11 = m11 * a11 + m12 * a21;
        cd n12 = m11 * a12 + m12 * a22;
        cd n21 = m21 * a11 + m22 * a21;
        cd n22 = m21 * a12 + m22 * a22;
        m11 = n11, m12 = n12, m21 = n21, m22 = n22;
    }
    double n1 = stack.incidence_index;
    double ns = stack.exit_index;
    cd b = n1 * m11 + n1 * ns * m12;
    cd c = m21 + ns * m22;
    cd denom = b + c;
    cd t = 2.0 * n1 / denom;
    cd r = (b - c) / denom;
    double tr = ns / n1 * std::norm(t);
    double re = std::norm(r);
    if (!std::isfinite(tr) || !std::isfinite(re)) {
        throw std::runtime_error("tmm: non-finite result at " + std::to_string(wavelength_nm) + " nm");
    }
    constexpr double slack = 1e-9;
    auto clamp = [&](double v, const char* what) {
        if (v < -slack || v > 1 + slack) {
            throw std::runtime_error(std::string("tmm: ") + what + " out of [0,1]: " + std::to_string(v));
        }
        return std::clamp(v, 0.0, 1.0);
    };
    return {clamp(tr, "transmittance"), clamp(re, "reflectance")};
}

double tmm_transmission(const Stack& stack, double wavelength_nm) {
    return tmm_response(stack, wavelength_nm).transmittance;
}

Spectrum::Spectrum(std::vector<double> wavelength_nm, std::vector<double> values)
    : wl_(std::move(wavelength_nm)), v_(std::move(values)) {
    check_grid(wl_, "spectrum");
    if (v_.size() != wl_.size()) {
        throw std::invalid_argument("spectrum: column lengths differ");
    }
    for (double v : v_) {
        if (!(v >= 0) || !std::isfinite(v)) {
            throw std::invalid_argument("spectrum: values must be finite and non-negative");
        }
    }
}

Spectrum Spectrum::flat(double lo_nm, double hi_nm, double value, double step_nm) {
    auto g = uniform_grid(lo_nm, hi_nm, step_nm);
    std::vector<double> v(g.size(), value);
    return Spectrum(std::move(g), std::move(v));
}

double Spectrum::at(double wavelength_nm) const {
    if (wavelength_nm < wl_.front() || wavelength_nm > wl_.back()) {
        throw std::out_of_range("spectrum has no data at " + std::to_string(wavelength_nm) + " nm");
    }
    return interp(wl_, v_, wavelength_nm);
}

Spectrum load_spectrum_csv(const std::filesystem::path& path) {
    auto cols = read_csv(path, 2);
    return Spectrum(std::move(cols[0]), std::move(cols[1]));
}

std::vector<double> uniform_grid(double lo_nm, double hi_nm, double step_nm) {
    if (!(step_nm > 0) || !(hi_nm > lo_nm)) {
        throw std::invalid_argument("grid: need lo < hi and step > 0");
    }
    auto count = static_cast<size_t>(std::llround((hi_nm - lo_nm) / step_nm));
    std::vector<double> g(count + 1);
    for (size_t i = 0; i <= count; ++i) {
        g[i] = lo_nm + step_nm * static_cast<double>(i);
    }
    g.back() = hi_nm;
    if (g.size() >= 2 && !(g[g.size() - 1] > g[g.size() - 2])) {
        throw std::invalid_argument("grid: step does not divide the range");
    }
    return g;
}

double fom_from_transmission(std::span<const double> grid, const Spectrum& solar, const TransmissionFn& t,
                             Band band) {
    if (grid.size() < 2) {
        throw std::invalid_argument("fom: grid needs at least two points");
    }
    for (size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("fom: grid must be strictly increasing");
        }
    }
    if (grid.front() < 300.0 || grid.back() > 2500.0) {
        throw std::invalid_argument("fom: grid must lie within [300, 2500] nm");
    }
    if (!(band.hi_nm > band.lo_nm)) {
        throw std::invalid_argument("fom: empty visible band");
    }
    // Breakpoints: grid plus band edges falling strictly inside an interval.
    std::vector<double> pts(grid.begin(), grid.end());
    for (double e : {band.lo_nm, band.hi_nm}) {
        if (e > pts.front() && e < pts.back() && !std::binary_search(grid.begin(), grid.end(), e)) {
            pts.insert(std::upper_bound(pts.begin(), pts.end(), e), e);
        }
    }
    auto inside = [&](double x, Side side) {
        return side == Side::Right ? (x >= band.lo_nm && x < band.hi_nm) : (x > band.lo_nm && x <= band.hi_nm);
    };
    auto deviation_sq = [&](double x, Side side) {
        double s = solar.at(x);
        double d = t(x, side) * s - (inside(x, side) ? s : 0.0);
        return d * d;
    };
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1], h = b - a;
        num += 0.5 * h * (deviation_sq(a, Side::Right) + deviation_sq(b, Side::Left));
        double sa = solar.at(a), sb = solar.at(b);
        den += 0.5 * h * (sa * sa + sb * sb);
    }
    if (!(den > 0)) {
        throw std::invalid_argument("fom: solar spectrum integrates to zero");
    }
    return 10.0 * num / den;
}

WindowDesign WindowDesign::with_palette(const MaterialDb& db, const std::vector<std::string>& names) {
    if (names.size() != 4) {
        throw std::invalid_argument("window design: palette needs four materials");
    }
    WindowDesign w;
    for (const auto& n : names) {
        w.palette.push_back(&db.get(n));
    }
    return w;
}

void WindowDesign::validate() const {
    if (palette.size() != 4 || std::any_of(palette.begin(), palette.end(), [](auto* p) { return p == nullptr; })) {
        throw std::invalid_argument("window design: palette needs four materials");
    }
    if (layers < 1) {
        throw std::invalid_argument("window design: need at least one layer");
    }
    if (!(total_thickness_nm > 0)) {
        throw std::invalid_argument("window design: total thickness must be positive");
    }
    for (const auto* m : palette) {
        if (!m->covers(grid.front()) || !m->covers(grid.back())) {
            throw std::out_of_range("window design: material " + m->name() + " does not cover the grid");
        }
    }
    if (cap && (!cap->material->covers(grid.front()) || !cap->material->covers(grid.back()))) {
        throw std::out_of_range("window design: cap material does not cover the grid");
    }
    if (solar.wavelengths().front() > grid.front() || solar.wavelengths().back() < grid.back()) {
        throw std::out_of_range("window design: spectrum does not cover the grid");
    }
}

Stack WindowDesign::stack_for(std::span<const int> bits) const {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("window design: odd bit count");
    }
    if (static_cast<int>(bits.size()) != bit_count()) {
        throw std::invalid_argument("window design: expected " + std::to_string(bit_count()) + " bits, got " +
                                    std::to_string(bits.size()));
    }
    Stack s;
    s.incidence_index = incidence_index;
    s.exit_index = exit_index;
    if (cap) {
        s.layers.push_back(*cap);
    }
    double d = total_thickness_nm / layers;
    for (size_t i = 0; i < bits.size(); i += 2) {
        if ((bits[i] != 0 && bits[i] != 1) || (bits[i + 1] != 0 && bits[i + 1] != 1)) {
            throw std::invalid_argument("window design: bits must be 0 or 1");
        }
        int code = 2 * bits[i] + bits[i + 1];
        s.layers.push_back({palette[static_cast<size_t>(code)], d});
    }
    return s;
}

std::vector<double> WindowDesign::transmission(std::span<const int> bits) const {
    validate();
    Stack s = stack_for(bits);
    std::vector<double> out(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        out[i] = tmm_transmission(s, grid[i]);
    }
    return out;
}

double WindowDesign::fom(std::span<const int> bits) const {
    auto tr = transmission(bits);
    // Breakpoints that are not grid points are band edges; interpolate there.
    TransmissionFn fn = [&](double x, Side) {
        auto it = std::lower_bound(grid.begin(), grid.end(), x);
        auto i = static_cast<size_t>(it - grid.begin());
        if (it != grid.end() && *it == x) {
            return tr[i];
        }
        double w = (x - grid[i - 1]) / (grid[i] - grid[i - 1]);
        return tr[i - 1] + w * (tr[i] - tr[i - 1]);
    };
    return fom_from_transmission(grid, solar, fn, band);
}

double window_fom(std::span<const int> bits, const WindowDesign& design) { return design.fom(bits); }

}  // namespace vqoa::photonics
