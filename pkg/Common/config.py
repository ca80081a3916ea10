# Numeric tolerances
PSD_RTOL = 1e-12  # Pivots <= PSD_RTOL * max diagonal of the full matrix count as zero mass
EIGEN_RTOL = 1e-12  # Jacobi stops once off-diagonal Frobenius mass <= EIGEN_RTOL * ||M||_F
NEGATIVE_CORRELATION_SLACK = 1e-10

# Enumeration and solver budgets
ENUMERATION_CAP = 2_000_000
JACOBI_MAX_SWEEPS = 100
JACOBI_MAX_DIM = 64

# Sampling
RNG_BLOCK = 1024  # Steps' worth of uniforms drawn per generator call
MASS_CACHE_SIZE = 65536

# Output
FLOAT_DIGITS = 17

