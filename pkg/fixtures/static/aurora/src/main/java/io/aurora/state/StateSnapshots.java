package io.aurora.state;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates snapshot and state handles for the streaming runtime.
 */
public class StateSnapshots {

    private static final Logger LOG = LoggerFactory.getLogger(StateSnapshots.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void shutdown(long graceMs) {
        LOG.info("Shutting down the snapshot manager with grace period {} ms", graceMs);
        active.clear();
        LOG.debug("Cleared {} residual snapshot entries on shutdown", active.size());
    }

    public boolean releaseSnapshot(long snapshotId) {
        Integer remaining = active.remove(snapshotId);
        if (remaining == null) {
            LOG.warn("Release requested for unknown snapshot {}", snapshotId);
            return false;
        }
        LOG.debug("Released snapshot {} leaving {} siblings behind", snapshotId, active.size());
        return true;
    }

    public void registerSnapshot(long snapshotId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(snapshotId, count);
        LOG.info("Registered snapshot {} with {} pending entries", snapshotId, count);
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        LOG.trace("Advancing state handle from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            LOG.warn(
                "Snapshot state handle lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        LOG.info(
            "Rebalanced snapshot share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void audit(String actor, String action) {
        LOG.info("Recorded chunk upload action {} issued by {}", action, actor);
        LOG.trace("Full chunk upload audit row is " + actor + " acting on " + action);
    }
}
