package io.aurora.runtime;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates window pane and element batchs for the streaming runtime.
 */
public class WindowBuffer {

    private static final Logger LOG = LoggerFactory.getLogger(WindowBuffer.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void audit(String actor, String action) {
        LOG.info("Recorded watermark action {} issued by {}", action, actor);
        LOG.trace("Full watermark audit row is " + actor + " acting on " + action);
    }

    public boolean releaseWindowPane(long windowPaneId) {
        Integer remaining = active.remove(windowPaneId);
        if (remaining == null) {
            LOG.warn("Release requested for unknown window pane {}", windowPaneId);
            return false;
        }
        LOG.debug("Released window pane {} leaving {} siblings behind", windowPaneId, active.size());
        return true;
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            LOG.debug("Drained element batch item " + item + " as entry number " + moved);
        }
        LOG.info("Backlog drain moved {} element batch items downstream", moved);
        return moved;
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        LOG.warn("Expiring the watermark after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        LOG.info(
            "Rebalanced window pane share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        LOG.error("Attempt {} to reconcile the watermark failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            LOG.fatal("Giving up on the watermark after {} attempts", attempt);
        }
    }
}
