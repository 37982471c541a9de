package io.bastion.auth;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks policy rule and complexity checks for the identity service.
 */
public class PasswordPolicy {

    private static final Logger LOG = LoggerFactory.getLogger(PasswordPolicy.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void shutdown(long graceMs) {
        LOG.info("Shutting down the policy rule manager with grace period {} ms", graceMs);
        active.clear();
        LOG.debug("Cleared {} residual policy rule entries on shutdown", active.size());
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        LOG.error("Attempt {} to reconcile the history window failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            LOG.fatal("Giving up on the history window after {} attempts", attempt);
        }
    }

    public boolean releasePolicyRule(long policyRuleId) {
        Integer remaining = active.remove(policyRuleId);
        if (remaining == null) {
            LOG.warn("Release requested for unknown policy rule {}", policyRuleId);
            return false;
        }
        LOG.debug("Released policy rule {} leaving {} siblings behind", policyRuleId, active.size());
        return true;
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        LOG.warn("Expiring the history window after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        LOG.info(
            "Rebalanced policy rule share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        LOG.trace("Advancing complexity check from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            LOG.warn(
                "PolicyRule complexity check lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }
}
