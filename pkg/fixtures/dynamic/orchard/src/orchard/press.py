"""Cider press cycle control."""

from logkit import Logger

log = Logger("orchard.press")

MAX_PRESSURE = 90


def run_cycle(load, pressure):
    """Press one load and report the yield in litres."""
    log.info("Press cycle started with load {} at pressure {}", load, pressure)
    litres = int(load * 0.4)
    if pressure > MAX_PRESSURE:
        log.error("Relief valve opened at pressure {} during cycle", pressure)
        litres = 0
    log.info("Press cycle finished with {} litres collected", litres)
    return litres


def drain(volume):
    """Empty the collection tank after a cycle."""
    remaining = volume
    if remaining < 0:
        log.error("Tank meter read negative volume {} before drain", remaining)
        remaining = 0
    log.info("Drained {} litres from the collection tank", remaining)
    return remaining


def idle_check(hours):
    """Housekeeping sweep while the press sits idle."""
    if hours > 72:
        log.warn("Press idle for {} hours, lubrication needed", hours)
        return False
    return True
