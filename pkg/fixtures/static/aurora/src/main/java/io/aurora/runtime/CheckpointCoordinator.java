package io.aurora.runtime;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates checkpoint and barriers for the streaming runtime.
 */
public class CheckpointCoordinator {

    private static final Logger log = LoggerFactory.getLogger(CheckpointCoordinator.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void audit(String actor, String action) {
        log.info("Recorded operator action {} issued by {}", action, actor);
        log.trace("Full operator audit row is " + actor + " acting on " + action);
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        log.error("Attempt {} to reconcile the operator failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            log.fatal("Giving up on the operator after {} attempts", attempt);
        }
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        log.trace("Advancing barrier from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            log.warn(
                "Checkpoint barrier lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public boolean releaseCheckpoint(long checkpointId) {
        Integer remaining = active.remove(checkpointId);
        if (remaining == null) {
            log.warn("Release requested for unknown checkpoint {}", checkpointId);
            return false;
        }
        log.debug("Released checkpoint {} leaving {} siblings behind", checkpointId, active.size());
        return true;
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        log.info(
            "Rebalanced checkpoint share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        log.warn("Expiring the operator after {} ms past its deadline", overdue);
        expired = expired + 1;
    }
}
