package io.aurora.connector;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates split and record batchs for the streaming runtime.
 */
public class SourceReader {

    private final Logger logger = LoggerFactory.getLogger(getClass());

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void reportHealth(boolean degraded, long probeMs) {
        logger.info("Health probe for the split finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void shutdown(long graceMs) {
        logger.info("Shutting down the split manager with grace period {} ms", graceMs);
        active.clear();
        logger.debug("Cleared {} residual split entries on shutdown", active.size());
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        logger.error("Attempt {} to reconcile the offset range failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            logger.fatal("Giving up on the offset range after {} attempts", attempt);
        }
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        logger.info(
            "Rebalanced split share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void audit(String actor, String action) {
        logger.info("Recorded offset range action {} issued by {}", action, actor);
        logger.trace("Full offset range audit row is " + actor + " acting on " + action);
    }

    public boolean releaseSplit(long splitId) {
        Integer remaining = active.remove(splitId);
        if (remaining == null) {
            logger.warn("Release requested for unknown split {}", splitId);
            return false;
        }
        logger.debug("Released split {} leaving {} siblings behind", splitId, active.size());
        return true;
    }
}
