# app/config.py
from pydantic_settings import BaseSettings

class Settings(BaseSettings):
    # Arithmetic
    PRECISION_DIGITS: int = 1000  # decimal digits
    REFERENCE_DIGITS: int = 200  # bisection depth for suite reference roots

    # Stopping rule
    TOLERANCE: str = "1e-50"
    MAX_ITER: int = 100
    DIVERGENCE_BOUND: float = 1e10

    # Scheme parameters (z = x + ALPHA * f(x)^EXPONENT_M)
    ALPHA: str = "1"
    EXPONENT_M: int = 3

    # Problem suite
    F7_LITERAL: bool = False  # evaluate f7 with the printed cos(pi/2)

    # Benchmark
    BENCH_WORKERS: int = 1

    # Basins of attraction
    BASIN_GRID: int = 512
    BASIN_REGION: str = "-2,2,-2,2"
    BASIN_MAX_ITER: int = 100
    BASIN_CAPTURE_TOL: float = 1e-3
    BASIN_WORKERS: int = 1

    # Output
    OUTPUT_DIR: str = "./results"
    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"
        case_sensitive = True

settings = Settings()
