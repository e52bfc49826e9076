# Standard library
import logging
import os
from fractions import Fraction

# Packages
import yaml


logger = logging.getLogger(__name__)

SETTINGS_PATH = os.path.join(os.path.dirname(__file__), "settings.yaml")


def load_settings(path: str = None) -> dict:
    """
    Read the packaged defaults, then overlay the YAML file named by
    $CONVEXCOND_SETTINGS (or `path`) if there is one
    """

    with open(SETTINGS_PATH) as settings_file:
        settings = yaml.load(settings_file, Loader=yaml.FullLoader)

    override_path = path or os.environ.get("CONVEXCOND_SETTINGS")

    if override_path:
        logger.info(f"Reading settings overrides from {override_path}")

        with open(override_path) as override_file:
            overrides = yaml.load(override_file, Loader=yaml.FullLoader)

        settings.update(overrides or {})

    settings["svg_margin"] = Fraction(str(settings["svg_margin"]))

    return settings


settings = load_settings()
