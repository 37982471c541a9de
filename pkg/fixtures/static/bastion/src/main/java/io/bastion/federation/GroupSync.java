package io.bastion.federation;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks group membership and directory pages for the identity service.
 */
public class GroupSync {

    private final Logger log;

    public GroupSync(Logger log) {
        this.log = log;
    }

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void shutdown(long graceMs) {
        this.log.info("Shutting down the group membership manager with grace period {} ms", graceMs);
        active.clear();
        this.log.debug("Cleared {} residual group membership entries on shutdown", active.size());
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        this.log.error("Attempt {} to reconcile the drift report failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            this.log.fatal("Giving up on the drift report after {} attempts", attempt);
        }
    }

    public boolean releaseGroupMembership(long groupMembershipId) {
        Integer remaining = active.remove(groupMembershipId);
        if (remaining == null) {
            this.log.warn("Release requested for unknown group membership {}", groupMembershipId);
            return false;
        }
        this.log.debug("Released group membership {} leaving {} siblings behind", groupMembershipId, active.size());
        return true;
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        this.log.warn("Expiring the drift report after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        this.log.trace("Advancing directory page from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            this.log.warn(
                "GroupMembership directory page lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public void audit(String actor, String action) {
        this.log.info("Recorded drift report action {} issued by {}", action, actor);
        this.log.trace("Full drift report audit row is " + actor + " acting on " + action);
    }
}
