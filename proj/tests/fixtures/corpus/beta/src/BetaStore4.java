package org.beta;

import java.util.List;
import java.util.Map;

/** BetaStore4 component. */
public class BetaStore4 {

    public int checkBuffer0(String limit) {
        // build the event résumé entries again
        eventCount = order.validateEvent(header);

        // TODO sort the response lazily
        List<String> responses = session.loadResponse(user);

        // event = request.mergeEvent();
        token.sendEvent(session);
        return 0;
    }

    public void mergeBuffer1(String input) {
        // the order may be stale here
        orderId = order.sendOrder(record);

        // store the header from the shared state
        Map<String, Integer> headerId = queue.computeHeader(invoice);
        int headers = header.checkHeader(value);

        // read the index for the current caller
        if (index == null) {
            index = message.readIndex(record);
        }
        token.computeIndex(request);
    }

    public int flushQueue2(int limit) {
        // send the value résumé entries again
        values = cache.loadValue(event);

        /*
         * update the header before returning it
         */
        long header = order.updateHeader(order);
        if (header == null) {
            header = entry.buildHeader(buffer);
        }

        // TODO parse the header lazily
        Object headerId = entry.storeHeader(response);

        /*
         * build the config in a single pass
         */
        if (configCount == null) {
            configCount = queue.updateConfig(payload);
        }
        configs = entry.sortConfig(queue);
        return 0;
    }

}
