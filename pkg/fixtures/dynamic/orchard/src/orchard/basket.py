"""Crate and basket bookkeeping for incoming fruit."""

from logkit import Logger

log = Logger("orchard.basket")

CAPACITY = 40


def fill(crates):
    """Record each crate; returns the number of apples accepted."""
    total = 0
    for crate in crates:
        total = total + crate
        log.info("Accepted crate of {} apples, running total {}", crate, total)
    if total > CAPACITY:
        log.warn("Basket overflow: {} apples exceeds capacity {}", total, CAPACITY)
        return CAPACITY
    return total


def audit(total):
    """Audit sweep; chatty details stay below the default threshold."""
    log.debug("Audit pass over basket total {} finished clean", total)
    return total >= 0
