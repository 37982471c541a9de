package io.aurora.network;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates partition and channels for the streaming runtime.
 */
public class PartitionDispatcher {

    private static final Logger log = LoggerFactory.getLogger(PartitionDispatcher.class);

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
        log.warn("Expiring the credit grant after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            log.debug("Drained channel item " + item + " as entry number " + moved);
        }
        log.info("Backlog drain moved {} channel items downstream", moved);
        return moved;
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        log.error("Attempt {} to reconcile the credit grant failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            log.fatal("Giving up on the credit grant after {} attempts", attempt);
        }
    }

    public void reportHealth(boolean degraded, long probeMs) {
        log.info("Health probe for the partition finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        log.info(
            "Rebalanced partition share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void registerPartition(long partitionId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(partitionId, count);
        log.info("Registered partition {} with {} pending entries", partitionId, count);
    }
}
