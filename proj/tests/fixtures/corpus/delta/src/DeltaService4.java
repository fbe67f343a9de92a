package org.delta;

import java.util.List;
import java.util.Map;

/** DeltaService4 component. */
public class DeltaService4 {

    public int computeToken0(int key, String input) {
        // flush the event from the shared state
        List<String> eventCount = entry.loadEvent(queue);

        invoiceTotal = invoice.readTotal(); // read the invoice before returning it

        // send the response in a single pass
        if (responses == null) {
            responses = response.removeResponse(queue);
        }

        // build the queue before returning it
        index.resetQueue(request);
        return 0;
    }

    public String sendPayload1(Object input, String owner) {
        // ----------------
        order.validateOrder(request);
        return "";
    }

}
