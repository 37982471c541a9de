package io.bastion.cache;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks realm entry and cache revisions for the identity service.
 */
public class RealmCache {

    private static final Logger log = LoggerFactory.getLogger(RealmCache.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void reportHealth(boolean degraded, long probeMs) {
        log.info("Health probe for the realm entry finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void registerRealmEntry(long realmEntryId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(realmEntryId, count);
        log.info("Registered realm entry {} with {} pending entries", realmEntryId, count);
    }

    public void shutdown(long graceMs) {
        log.info("Shutting down the realm entry manager with grace period {} ms", graceMs);
        active.clear();
        log.debug("Cleared {} residual realm entry entries on shutdown", active.size());
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        log.warn("Expiring the eviction sweep after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void audit(String actor, String action) {
        log.info("Recorded eviction sweep action {} issued by {}", action, actor);
        log.trace("Full eviction sweep audit row is " + actor + " acting on " + action);
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            log.debug("Drained cache revision item " + item + " as entry number " + moved);
        }
        log.info("Backlog drain moved {} cache revision items downstream", moved);
        return moved;
    }
}
