"""Time-unit conventions.

All subject-level times are carried in days. Hazard rates are carried
per year. Fixed conversions: 1 month = 30.4375 days, 1 year = 365.25
days (so 1 year = 12 months exactly).
"""

import re

DAYS_PER_MONTH = 30.4375
DAYS_PER_YEAR = 365.25

_DURATION_RE = re.compile(r"^\s*([0-9]*\.?[0-9]+)\s*(d|day|days|mo|month|months|yr|year|years)?\s*$")

_UNIT_DAYS = {
    None: 1.0,
    "d": 1.0, "day": 1.0, "days": 1.0,
    "mo": DAYS_PER_MONTH, "month": DAYS_PER_MONTH, "months": DAYS_PER_MONTH,
    "yr": DAYS_PER_YEAR, "year": DAYS_PER_YEAR, "years": DAYS_PER_YEAR,
}


def months(x):
    """Months -> days."""
    return x * DAYS_PER_MONTH


def years(x):
    """Years -> days."""
    return x * DAYS_PER_YEAR


def to_months(days):
    return days / DAYS_PER_MONTH


def to_years(days):
    return days / DAYS_PER_YEAR


def parse_duration(text):
    """Parse a duration like '18mo', '1.5yr' or '90' (plain days) to days."""
    m = _DURATION_RE.match(str(text))
    if m is None:
        raise ValueError(f"cannot parse duration: {text!r}")
    return float(m.group(1)) * _UNIT_DAYS[m.group(2)]
