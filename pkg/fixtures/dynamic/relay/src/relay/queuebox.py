"""Bounded relay queue with delivery bookkeeping."""

from logkit import Logger

log = Logger("relay.queuebox")

WINDOW = 8


def enqueue(pending, message):
    """Append one message; drops it when the relay window is full."""
    if len(pending) >= WINDOW:
        log.error("Relay window full, dropping message {}", message)
        return pending
    pending.append(message)
    log.info("Queued message {} at slot {}", message, len(pending))
    return pending


def flush(pending):
    """Deliver every queued message in arrival order."""
    delivered = 0
    for message in pending:
        delivered = delivered + 1
        log.info("Delivered message {} as item {} of {}", message, delivered, len(pending))
    log.info("Relay flush moved {} messages downstream", delivered)
    return delivered
