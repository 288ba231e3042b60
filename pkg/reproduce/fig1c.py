#!/usr/bin/env python3
"""Mirror spectrum map with the condensate coupled at zeta = 0.7*chi*x_zpf
and the Bogoliubov mode resonant with the mirror: rescaled S_q over the
(omega, detuning) plane.  A narrow secondary structure sits pinned at
omega_tilde for every detuning column."""
import os
from pathlib import Path

from optobec.cli import main

os.chdir(Path(__file__).resolve().parents[1])
os.makedirs("reproduce/out", exist_ok=True)

raise SystemExit(main([
    "spectrum",
    "--config", "configs/paper.json",
    "--observable", "q",
    "--omega-grid", "0.5*omega_m:1.5*omega_m:401",
    "--map", "omega-delta",
    "--delta-grid", "0.02*kappa:2*kappa:100",
    "--normalize",
    "--out", "reproduce/out/fig1c.csv",
    "--plot",
]))
