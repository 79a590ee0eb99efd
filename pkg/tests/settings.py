"""eulerian settings for console walk-through"""

import os

from dotenv import load_dotenv

from eulerian_settings import EulerianSettings

load_dotenv()

settings = EulerianSettings(
    workers=int(os.getenv("EULERIAN_WORKERS", "2")),
    before_check=lambda check_name, params: print(
        f'CHECK_START, CHECK: "{check_name}"' f", PARAMS: {params}"
    ),
    after_check=lambda check_name, outcome, duration: print(
        f'CHECK_END, CHECK: "{check_name}"' f", OUTCOME: {outcome}, DURATION: {duration}"
    ),
)
