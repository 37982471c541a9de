package io.bastion.auth;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks login attempt and lockout windows for the identity service.
 */
public class LoginThrottle {

    private final Logger logger = LoggerFactory.getLogger(getClass());

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        logger.warn("Expiring the client address after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void audit(String actor, String action) {
        logger.info("Recorded client address action {} issued by {}", action, actor);
        logger.trace("Full client address audit row is " + actor + " acting on " + action);
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        logger.error("Attempt {} to reconcile the client address failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            logger.fatal("Giving up on the client address after {} attempts", attempt);
        }
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            logger.debug("Drained lockout window item " + item + " as entry number " + moved);
        }
        logger.info("Backlog drain moved {} lockout window items downstream", moved);
        return moved;
    }

    public void reportHealth(boolean degraded, long probeMs) {
        logger.info("Health probe for the login attempt finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        logger.info(
            "Rebalanced login attempt share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }
}
