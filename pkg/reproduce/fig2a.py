#!/usr/bin/env python3
"""Growth of the secondary structure with the atom-cavity rate: rescaled
S_q over the (omega, zeta) plane at fixed detuning kappa/2, resonant
Bogoliubov mode.  The narrow feature at omega_tilde rises from nothing at
zeta = 0 to the pinned dark-mode height."""
import os
from pathlib import Path

from optobec.cli import main

os.chdir(Path(__file__).resolve().parents[1])
os.makedirs("reproduce/out", exist_ok=True)

raise SystemExit(main([
    "spectrum",
    "--config", "configs/paper.json",
    "--observable", "q",
    "--omega-grid", "0.9*omega_m:1.1*omega_m:401",
    "--map", "omega-zeta",
    "--zeta-grid", "0:100:101",
    "--fix", "delta=0.5*kappa",
    "--normalize",
    "--out", "reproduce/out/fig2a.csv",
    "--plot",
]))
