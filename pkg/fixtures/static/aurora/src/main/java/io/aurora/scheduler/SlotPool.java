package io.aurora.scheduler;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates slot request and allocations for the streaming runtime.
 */
public class SlotPool {

    private static final Logger LOGGER = LoggerFactory.getLogger(SlotPool.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void shutdown(long graceMs) {
        LOGGER.info("Shutting down the slot request manager with grace period {} ms", graceMs);
        active.clear();
        LOGGER.debug("Cleared {} residual slot request entries on shutdown", active.size());
    }

    public void reportHealth(boolean degraded, long probeMs) {
        LOGGER.info("Health probe for the slot request finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void audit(String actor, String action) {
        LOGGER.info("Recorded resource profile action {} issued by {}", action, actor);
        LOGGER.trace("Full resource profile audit row is " + actor + " acting on " + action);
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        LOGGER.error("Attempt {} to reconcile the resource profile failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            LOGGER.fatal("Giving up on the resource profile after {} attempts", attempt);
        }
    }

    public boolean releaseSlotRequest(long slotRequestId) {
        Integer remaining = active.remove(slotRequestId);
        if (remaining == null) {
            LOGGER.warn("Release requested for unknown slot request {}", slotRequestId);
            return false;
        }
        LOGGER.debug("Released slot request {} leaving {} siblings behind", slotRequestId, active.size());
        return true;
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        LOGGER.trace("Advancing allocation from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            LOGGER.warn(
                "SlotRequest allocation lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }
}
