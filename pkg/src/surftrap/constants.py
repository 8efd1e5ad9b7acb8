"""Physical constants and unit helpers.

CODATA 2018 values are hard-coded so that unit conversions are reproducible
independent of the runtime environment.
"""

ELEMENTARY_CHARGE = 1.602176634e-19  # C (exact)
ATOMIC_MASS = 1.66053906660e-27      # kg
BOLTZMANN = 1.380649e-23             # J/K (exact)
ELECTRON_MASS = 9.1093837015e-31     # kg

# 9Be+ : atomic mass of 9Be minus one electron (binding energy neglected).
BE9_ATOMIC_MASS_U = 9.0121831
BE9_ION_MASS = BE9_ATOMIC_MASS_U * ATOMIC_MASS - ELECTRON_MASS

ION_MASSES = {
    "Be9": BE9_ION_MASS,
    "Mg24": 23.985041697 * ATOMIC_MASS - ELECTRON_MASS,
    "Ca40": 39.962590863 * ATOMIC_MASS - ELECTRON_MASS,
}
