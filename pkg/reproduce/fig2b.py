#!/usr/bin/env python3
"""Effective mirror temperature versus detuning for five atomic settings:
no atoms; a far-detuned Bogoliubov mode (omega_tilde = 0.1*omega_m) at
zeta = 50 and 100, which barely perturbs the cooling curve where it is
stable; and a resonant mode (omega_tilde = omega_m) at zeta = 50 and 100,
which suppresses the cooling entirely.  Unstable sweep points appear as
NaN gaps.  One CSV per curve."""
import os
from pathlib import Path

from optobec.cli import main

os.chdir(Path(__file__).resolve().parents[1])
os.makedirs("reproduce/out", exist_ok=True)

COMMON = ["temperature", "--config", "configs/paper.json",
          "--variable", "delta", "--grid", "0.05*kappa:2*kappa:40", "--plot"]

CURVES = {
    "fig2b_zeta0.csv": ["--fix", "zeta=0"],
    "fig2b_z50_wt01.csv": ["--fix", "zeta=50", "--fix", "omega_tilde=0.1*omega_m"],
    "fig2b_z100_wt01.csv": ["--fix", "zeta=100", "--fix", "omega_tilde=0.1*omega_m"],
    "fig2b_z50_wtm.csv": ["--fix", "zeta=50"],
    "fig2b_z100_wtm.csv": ["--fix", "zeta=100"],
}

rc = 0
for name, fixes in CURVES.items():
    rc = max(rc, main(COMMON + fixes + ["--out", f"reproduce/out/{name}"]))
raise SystemExit(rc)
