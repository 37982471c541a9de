package io.aurora.runtime;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates restart region and failover attempts for the streaming runtime.
 */
public class RecoveryPlanner {

    private static final Logger log = LoggerFactory.getLogger(RecoveryPlanner.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void reportHealth(boolean degraded, long probeMs) {
        log.info("Health probe for the restart region finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public boolean releaseRestartRegion(long restartRegionId) {
        Integer remaining = active.remove(restartRegionId);
        if (remaining == null) {
            log.warn("Release requested for unknown restart region {}", restartRegionId);
            return false;
        }
        log.debug("Released restart region {} leaving {} siblings behind", restartRegionId, active.size());
        return true;
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            log.debug("Drained failover attempt item " + item + " as entry number " + moved);
        }
        log.info("Backlog drain moved {} failover attempt items downstream", moved);
        return moved;
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        log.warn("Expiring the recovery plan after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        log.info(
            "Rebalanced restart region share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void audit(String actor, String action) {
        log.info("Recorded recovery plan action {} issued by {}", action, actor);
        log.trace("Full recovery plan audit row is " + actor + " acting on " + action);
    }
}
