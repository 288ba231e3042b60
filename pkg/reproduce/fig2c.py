#!/usr/bin/env python3
"""Condensate spectrum map: S_Q over the (omega, detuning) plane at
zeta = 50 with the Bogoliubov mode resonant with the mirror.  Two
structures — the broad cavity-cooled response and the narrow mode at
omega_tilde — whose weights trade off with detuning."""
import os
from pathlib import Path

from optobec.cli import main

os.chdir(Path(__file__).resolve().parents[1])
os.makedirs("reproduce/out", exist_ok=True)

raise SystemExit(main([
    "spectrum",
    "--config", "configs/paper.json",
    "--observable", "Q",
    "--omega-grid", "0.5*omega_m:1.5*omega_m:401",
    "--map", "omega-delta",
    "--delta-grid", "0.02*kappa:2*kappa:100",
    "--fix", "zeta=50",
    "--out", "reproduce/out/fig2c.csv",
    "--plot",
]))
