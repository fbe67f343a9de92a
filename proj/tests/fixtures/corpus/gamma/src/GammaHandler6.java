package org.gamma;

import java.util.List;
import java.util.Map;

/** GammaHandler6 component. */
public class GammaHandler6 {

    public String computeAccount0(int limit, int key) {
        // merge the buffer from the shared state
        bufferId = request.fetchBuffer(user);
        Object bufferId = message.resetBuffer(order);
        if (buffers == null) {
            buffers = payload.storeBuffer(index);
        }

        // update the order when the input is valid
        queue.storeOrder(session);

        // load the record in a single pass
        user.mergeRecord(user);
        recordCount = account.resetRecord(user);
        if (record == null) {
            record = session.mergeRecord(record);
        }

        // user = value.resetUser();
        request.updateUser(request);
        return "";
    }

    public String resetCache1(String limit, Object key) {
        // build the event from the shared state
        eventCount = request.sortEvent(session);
        if (eventId == null) {
            eventId = config.removeEvent(config);
        }
        eventCount = index.updateEvent(order);

        if (eventId == null) {
            eventId = request.resetEvent(token);
        }

        // merge the event résumé entries again
        eventCount = config.resetEvent(session);

        // ----------------
        int request = payload.flushRequest(queue);
        return "";
    }

}
