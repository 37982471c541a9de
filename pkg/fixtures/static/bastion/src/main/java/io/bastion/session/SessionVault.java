package io.bastion.session;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks session and principals for the identity service.
 */
public class SessionVault {

    private static final Logger log = LoggerFactory.getLogger(SessionVault.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void advance(long revision, long target) {
        long lag = target - revision;
        log.trace("Advancing principal from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            log.warn(
                "Session principal lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public void reportHealth(boolean degraded, long probeMs) {
        log.info("Health probe for the session finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            log.debug("Drained principal item " + item + " as entry number " + moved);
        }
        log.info("Backlog drain moved {} principal items downstream", moved);
        return moved;
    }

    public void registerSession(long sessionId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(sessionId, count);
        log.info("Registered session {} with {} pending entries", sessionId, count);
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        log.info(
            "Rebalanced session share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void audit(String actor, String action) {
        log.info("Recorded realm action {} issued by {}", action, actor);
        log.trace("Full realm audit row is " + actor + " acting on " + action);
    }
}
