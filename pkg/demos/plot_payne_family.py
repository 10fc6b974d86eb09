"""
Non-unimodal reflexive spectra
==============================

Weight (1,...,1,s) with s*k ones is reflexive with volume s(k+1).  Its
delta-vector is 1 + z + ... + z^{sk} plus extra terms z^{jk}, which
breaks unimodality as soon as s >= 3.
"""

from latticespec.report import analyze_payne

for s, k in [(2, 2), (2, 3), (3, 2), (4, 2)]:
    rep = analyze_payne(s, k)
    print(f"s={s} k={k} weights={tuple(rep.weights)}")
    print("  delta:", rep.delta)
    print("  unimodal:", rep.unimodal, " HL:", rep.hl["holds"], " closed form ok:", rep.extra["closed_form_matches"])
