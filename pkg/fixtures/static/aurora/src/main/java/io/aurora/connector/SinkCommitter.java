package io.aurora.connector;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates transaction and commit epochs for the streaming runtime.
 */
public class SinkCommitter {

    private static final Logger LOG = LoggerFactory.getLogger(SinkCommitter.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        LOG.error("Attempt {} to reconcile the flush batch failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            LOG.fatal("Giving up on the flush batch after {} attempts", attempt);
        }
    }

    public void reportHealth(boolean degraded, long probeMs) {
        LOG.info("Health probe for the transaction finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        LOG.warn("Expiring the flush batch after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void registerTransaction(long transactionId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(transactionId, count);
        LOG.info("Registered transaction {} with {} pending entries", transactionId, count);
    }

    public void shutdown(long graceMs) {
        LOG.info("Shutting down the transaction manager with grace period {} ms", graceMs);
        active.clear();
        LOG.debug("Cleared {} residual transaction entries on shutdown", active.size());
    }

    public boolean releaseTransaction(long transactionId) {
        Integer remaining = active.remove(transactionId);
        if (remaining == null) {
            LOG.warn("Release requested for unknown transaction {}", transactionId);
            return false;
        }
        LOG.debug("Released transaction {} leaving {} siblings behind", transactionId, active.size());
        return true;
    }
}
