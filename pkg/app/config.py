from typing import List

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # resource guards (n above these needs force)
    MAX_N_SYMBOLIC: int = 6
    MAX_N_TENSOR: int = 4

    # randomized checks
    DEFAULT_SEED: int = 1729
    RANK_POINTS: int = 2
    RANDOM_NUMERATOR_BOUND: int = 10**6
    TENSOR_SAMPLE: int = 256

    PARALLEL_JOBS: int = 1
    CACHE_TTL_SECONDS: int = 600
    # structure-constant memos kept for specializations other than u and u = 1
    MEMO_SPECIALIZATIONS: int = 4
    WARMUP_SIZES: str = "2,3"

    LOG_LEVEL: str = "INFO"
    LOG_DIR: str = "logs"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"

    @property
    def warmup_sizes(self) -> List[int]:
        return [int(s) for s in self.WARMUP_SIZES.split(",") if s.strip()]


settings = Settings()
