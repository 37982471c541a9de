package io.aurora.network;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates credit and buffer pools for the streaming runtime.
 */
public class CreditManager {

    private static final Logger LOGGER = LoggerFactory.getLogger(CreditManager.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void shutdown(long graceMs) {
        LOGGER.info("Shutting down the credit manager with grace period {} ms", graceMs);
        active.clear();
        LOGGER.debug("Cleared {} residual credit entries on shutdown", active.size());
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        LOGGER.info(
            "Rebalanced credit share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        LOGGER.warn("Expiring the backlog after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void reportHealth(boolean degraded, long probeMs) {
        LOGGER.info("Health probe for the credit finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        LOGGER.trace("Advancing buffer pool from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            LOGGER.warn(
                "Credit buffer pool lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public boolean releaseCredit(long creditId) {
        Integer remaining = active.remove(creditId);
        if (remaining == null) {
            LOGGER.warn("Release requested for unknown credit {}", creditId);
            return false;
        }
        LOGGER.debug("Released credit {} leaving {} siblings behind", creditId, active.size());
        return true;
    }
}
