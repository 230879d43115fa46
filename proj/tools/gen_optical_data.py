#!/usr/bin/env python3
"""Regenerate data/materials/*.csv and data/solar_am15g_approx.csv.

Refractive indices come from published dispersion fits:
  SiO2   fused silica, Malitson, JOSA 55, 1205 (1965)
  Si3N4  Luke et al., Opt. Lett. 40, 4823 (2015)
  Al2O3  sapphire ordinary ray, Malitson, JOSA 52, 1377 (1962)
  TiO2   rutile ordinary ray, DeVore, JOSA 41, 416 (1951)
The fits are lossless. The TiO2 fit diverges near 283 nm, so its index is
held at the 400 nm value below that, and it gets an exponential band-edge
absorption tail below 420 nm so UV light is attenuated. The solar table is a 5778 K
blackbody at 1 AU scaled by 0.75, a smooth stand-in for AM1.5G.
"""

import argparse
import math
import pathlib

LO_NM, HI_NM, STEP_NM = 300, 3000, 5


def sellmeier(lam_um, terms):
    n2 = 1.0
    for b, c in terms:
        n2 += b * lam_um**2 / (lam_um**2 - c**2)
    return math.sqrt(n2)


def sio2(lam_um):
    return sellmeier(lam_um, [(0.6961663, 0.0684043), (0.4079426, 0.1162414), (0.8974794, 9.896161)]), 0.0


def si3n4(lam_um):
    return sellmeier(lam_um, [(3.0249, 0.1353406), (40314.0, 1239.842)]), 0.0


def al2o3(lam_um):
    return sellmeier(lam_um, [(1.4313493, 0.0726631), (0.65054713, 0.1193242), (5.3414021, 18.028251)]), 0.0


def tio2(lam_um):
    lam_nm = lam_um * 1000.0
    lam_fit = max(lam_um, 0.4)
    n = math.sqrt(5.913 + 0.2441 / (lam_fit**2 - 0.0803))
    kappa = min(1.2, 0.1 * math.exp((360.0 - lam_nm) / 17.4)) if lam_nm < 420.0 else 0.0
    return n, kappa


MATERIALS = {"SiO2": sio2, "Si3N4": si3n4, "Al2O3": al2o3, "TiO2": tio2}


def solar(lam_nm):
    h, c, kb = 6.62607015e-34, 2.99792458e8, 1.380649e-23
    lam = lam_nm * 1e-9
    radiance = 2 * h * c**2 / lam**5 / math.expm1(h * c / (lam * kb * 5778.0))
    dilution = (6.957e8 / 1.495978707e11) ** 2
    return 0.75 * math.pi * radiance * dilution * 1e-9  # W m^-2 nm^-1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "data", type=pathlib.Path)
    args = ap.parse_args()
    (args.out / "materials").mkdir(parents=True, exist_ok=True)
    grid = range(LO_NM, HI_NM + 1, STEP_NM)
    for name, fn in MATERIALS.items():
        with open(args.out / "materials" / f"{name}.csv", "w") as f:
            f.write(f"# {name}; regenerate with tools/gen_optical_data.py\n")
            f.write("wavelength_nm,n,k\n")
            for lam in grid:
                n, k = fn(lam / 1000.0)
                f.write(f"{lam},{n:.6f},{k:.6g}\n")
    with open(args.out / "solar_am15g_approx.csv", "w") as f:
        f.write("# scaled 5778 K blackbody, W m^-2 nm^-1; regenerate with tools/gen_optical_data.py\n")
        f.write("wavelength_nm,irradiance\n")
        for lam in grid:
            f.write(f"{lam},{solar(lam):.6f}\n")


if __name__ == "__main__":
    main()
