package io.bastion.audit;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks audit event and actors for the identity service.
 */
public class AuditTrail {

    private static final Logger LOGGER = LoggerFactory.getLogger(AuditTrail.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void reportHealth(boolean degraded, long probeMs) {
        LOGGER.info("Health probe for the audit event finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        LOGGER.trace("Advancing actor from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            LOGGER.warn(
                "AuditEvent actor lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            LOGGER.debug("Drained actor item " + item + " as entry number " + moved);
        }
        LOGGER.info("Backlog drain moved {} actor items downstream", moved);
        return moved;
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        LOGGER.error("Attempt {} to reconcile the outcome sink failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            LOGGER.fatal("Giving up on the outcome sink after {} attempts", attempt);
        }
    }

    public void audit(String actor, String action) {
        LOGGER.info("Recorded outcome sink action {} issued by {}", action, actor);
        LOGGER.trace("Full outcome sink audit row is " + actor + " acting on " + action);
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        LOGGER.warn("Expiring the outcome sink after {} ms past its deadline", overdue);
        expired = expired + 1;
    }
}
